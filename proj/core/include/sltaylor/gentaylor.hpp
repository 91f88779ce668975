#pragma once

/// Generalized derivatives, generalized polynomials and Taylor coefficients
/// relative to a recursive family, plus least-squares projection onto the
/// phi_k systems.
///
///   gamma_0(h) = h,   gamma_k(h) = phi^{(-1)^{k-1}} * (gamma_{k-1}(h))'
///   P_n = sum_k alpha_k psi_k,   alpha_k = gamma_k(h)(x0) / k!

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sltaylor/chebfit.hpp"
#include "sltaylor/grid.hpp"
#include "sltaylor/jet.hpp"
#include "sltaylor/recint.hpp"

namespace sltaylor {

inline constexpr std::size_t kDefaultSafeDepth = 6;

struct GammaOptions {
  /// Orders above this are returned but flagged as reduced accuracy.
  std::size_t safe_depth = kDefaultSafeDepth;
  ChebyshevFitOptions fit{};
  /// Exact jet of phi at x0 (order >= n - 1); otherwise phi is fitted from the family.
  std::optional<Jet> phi_jet;
};

struct GenDerivativeSequence {
  /// gamma_0(h)(x0) .. gamma_n(h)(x0)
  std::vector<Complex> values;
  double x0 = 0.0;
  bool reduced_accuracy = false;

  std::size_t order() const noexcept { return values.size() - 1; }
};

GenDerivativeSequence gamma_seq(const GridFunction& h, const RecursiveFamily& family, std::size_t n,
                                const GammaOptions& options = {});

/// gamma_0..gamma_n of the jets h and phi at their common anchor.
/// h needs order >= n, phi order >= n - 1.
std::vector<Complex> gamma_from_jets(const Jet& h, const Jet& phi, std::size_t n);

class GenPolynomial {
 public:
  GenPolynomial(const RecursiveFamily& family, std::vector<Complex> alpha);

  const RecursiveFamily& family() const noexcept { return *family_; }
  std::span<const Complex> alpha() const noexcept { return alpha_; }
  std::size_t order() const noexcept { return alpha_.size() - 1; }

  Complex operator()(double x) const;
  GridFunction on_grid() const;

 private:
  const RecursiveFamily* family_;
  std::vector<Complex> alpha_;
};

GenPolynomial gen_taylor_coeffs(const GridFunction& h, const RecursiveFamily& family, std::size_t n,
                                const GammaOptions& options = {});
Complex eval_gen_polynomial(const GenPolynomial& p, double x);

struct RemainderOptions {
  GammaOptions gamma{};
  /// gamma_{n+1}(h) on the grid, when known in closed form.
  std::optional<GridFunction> gamma_next;
  double abs_tol = 1e-10;
  double rel_tol = 1e-6;
};

struct RemainderPoint {
  double x = 0.0;
  double error = 0.0;
  double bound = 0.0;
};

struct RemainderReport {
  std::size_t n = 0;
  std::vector<RemainderPoint> points;
  std::vector<RemainderPoint> violations;
  /// min over points of bound - error
  double max_slack = 0.0;
  bool passed = true;
  bool reduced_accuracy = false;
};

/// Checks |h(x) - P_n(x)| <= max_{[x0,x]} |gamma_{n+1}(h)| |psi_{n+1}(x)| / (n+1)!
/// at each sample point. Points left of x0 raise DomainError.
RemainderReport remainder_check(const GridFunction& h, const RecursiveFamily& family, std::size_t n,
                                std::span<const double> sample_points, const RemainderOptions& options = {});

enum class BasisSelection { even, odd, full };

struct Projection {
  /// psi/phi indices of the basis functions used, ascending.
  std::vector<std::size_t> indices;
  std::vector<Complex> coefficients;
  double l2_error = 0.0;
  double max_error = 0.0;
  double condition_estimate = 1.0;
};

/// Least squares fit of h by sum c_k phi_k over n_functions basis functions
/// (phi_0, phi_2, ... / phi_1, phi_3, ... / phi_0 .. phi_{N-1}) in the
/// trapezoid-weighted grid inner product. Throws NumericalError on rank collapse.
Projection least_squares_project(const GridFunction& h, const RecursiveFamily& family, std::size_t n_functions,
                                 BasisSelection which);

std::vector<std::size_t> basis_indices(BasisSelection which, std::size_t n_functions);

}  // namespace sltaylor
