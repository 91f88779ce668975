#pragma once

/// Spectral-parameter power series solutions of u'' + q u = lambda u:
///
///   u1 = f * sum_k lambda^k X~(2k) / (2k)!
///   u2 = f * sum_k lambda^k X(2k+1) / (2k+1)!
///
/// with u1(x0) = f(x0), u1'(x0) = f'(x0), u2(x0) = 0, u2'(x0) = 1/f(x0).

#include <cstddef>

#include "sltaylor/grid.hpp"
#include "sltaylor/recint.hpp"

namespace sltaylor {

enum class SolutionKind { u1, u2 };

/// Largest truncation the family supports: 2 * n_terms - 1 <= order.
std::size_t max_terms(const RecursiveFamily& family);

/// A truncated SPPS solution bound to a family. Cheap to copy; the family must outlive it.
class SppsSolution {
 public:
  SppsSolution(const RecursiveFamily& family, Complex lambda, std::size_t n_terms, SolutionKind kind);

  const RecursiveFamily& family() const noexcept { return *family_; }
  Complex lambda() const noexcept { return lambda_; }
  std::size_t n_terms() const noexcept { return n_terms_; }
  SolutionKind kind() const noexcept { return kind_; }

  Complex value(double x) const;
  Complex derivative(double x) const;
  Complex value_at_node(std::size_t i) const;
  Complex derivative_at_node(std::size_t i) const;

  GridFunction values() const;
  GridFunction derivatives() const;

 private:
  // sum of lambda^k * F(m_k) / m_k! at a node, F and m_k per `which`
  enum class Series { value, derivative_tail };
  template <typename Sampler>
  Complex series(Series which, const Sampler& at) const;

  const RecursiveFamily* family_;
  Complex lambda_;
  std::size_t n_terms_;
  SolutionKind kind_;
};

Complex eval_u1(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms);
Complex eval_u2(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms);
Complex eval_u1_prime(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms);
Complex eval_u2_prime(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms);

/// max over interior nodes of |u'' + q u - lambda u| / (1 + |lambda| max|u|).
double residual(Complex lambda, const GridFunction& u, const GridFunction& q);

struct TruncationChoice {
  std::size_t n_terms = 1;
  /// The tolerance could not be verified within the family order.
  bool cap_reached = false;
};

/// Smallest n_terms whose first two omitted terms (k = n, n+1) of both series have
/// sup-norm below tol * sup|partial sum|.
TruncationChoice choose_truncation(const RecursiveFamily& family, Complex lambda, double tol);

/// gamma_j(u/f) as a grid function, from the series of u/f:
/// gamma_j(psi_m) = m!/(m-j)! * F(m-j) with F the family psi_m belongs to.
GridFunction quotient_gen_derivative(const RecursiveFamily& family, Complex lambda, SolutionKind kind,
                                     std::size_t j, std::size_t n_terms);

}  // namespace sltaylor
