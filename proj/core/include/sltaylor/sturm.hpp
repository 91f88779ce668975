#pragma once

/// Regular Sturm-Liouville problems u'' + q u = lambda u on [a,b] with
///   c1 u(a) + c2 u'(a) = 0,   c3 u(b) + c4 u'(b) = 0.

#include <cstddef>
#include <string>
#include <vector>

#include "sltaylor/grid.hpp"
#include "sltaylor/recint.hpp"
#include "sltaylor/spps.hpp"

namespace sltaylor {

/// value * u + slope * u' = 0
struct BoundaryCondition {
  Complex value{1.0, 0.0};
  Complex slope{0.0, 0.0};

  static BoundaryCondition dirichlet() { return {{1.0, 0.0}, {0.0, 0.0}}; }
  static BoundaryCondition neumann() { return {{0.0, 0.0}, {1.0, 0.0}}; }
};

class SlProblem {
 public:
  SlProblem(GridFunction q, BoundaryCondition left, BoundaryCondition right);

  const GridFunction& q() const noexcept { return q_; }
  const Grid& grid() const noexcept { return q_.grid(); }
  const BoundaryCondition& left() const noexcept { return left_; }
  const BoundaryCondition& right() const noexcept { return right_; }

 private:
  GridFunction q_;
  BoundaryCondition left_;
  BoundaryCondition right_;
};

struct SeedSolution {
  GridFunction f;
  GridFunction f_prime;
};

/// f = v1 + i v2 with v1, v2 the real solutions of f'' + q f = 0 taking
/// (1,0) and (0,1) at a, integrated by classical RK4 between nodes.
/// Throws ConfigError for complex q and SeedError when |f| drops below threshold.
SeedSolution build_seed_solution(const GridFunction& q, double threshold = kDefaultSeedThreshold);
inline GridFunction build_seed(const GridFunction& q) { return build_seed_solution(q).f; }

/// Family anchored at a, from the seed of q.
RecursiveFamily build_problem_family(const SlProblem& problem, const FamilyOptions& options = {});

/// Coefficients of u = beta1 u1 + beta2 u2 meeting the left condition with u(a) = c2, u'(a) = -c1.
struct Combination {
  Complex beta1;
  Complex beta2;
};
Combination left_combination(const SlProblem& problem, const RecursiveFamily& family);

/// Phi(lambda) = c3 u(b) + c4 u'(b). The family must be anchored at a.
Complex characteristic(const SlProblem& problem, const RecursiveFamily& family, Complex lambda,
                       std::size_t n_terms);

/// u = beta1 u1 + beta2 u2 on the grid.
GridFunction eigenfunction(const SlProblem& problem, const RecursiveFamily& family, Complex lambda,
                           std::size_t n_terms);

struct EigenOptions {
  double lambda_min = -100.0;
  double lambda_max = 0.0;
  std::size_t scan_points = 201;
  /// Relative size of |Phi| accepted at a root, against the bracket end values.
  double tol = 1e-8;
  double truncation_tol = 1e-14;
};

struct ScanSample {
  double lambda = 0.0;
  Complex phi;
  std::size_t n_terms = 0;
};

struct EigenResult {
  std::vector<Complex> eigenvalues;
  /// |Phi(lambda_n)| relative to the bracket end values
  std::vector<double> characteristic_residuals;
  /// residual of the combined eigenfunction in the differential equation
  std::vector<double> eigenfunction_residuals;
  std::vector<std::size_t> truncations;
  std::vector<std::string> warnings;
  std::vector<ScanSample> scan;
  /// rotation used to make Phi real
  double theta = 0.0;
};

EigenResult find_eigenvalues(const SlProblem& problem, const RecursiveFamily& family, const EigenOptions& options);

}  // namespace sltaylor
