#pragma once

/// The lower-triangular matrix A_n with
///
///   h^{[k]}(x0) = sum_{m<=k} a_{k,m}(x0) * gamma_m(h)(x0),   k = 0..n,
///
/// and the ordinary Taylor data of u1/f and u2/f it produces.

#include <cstddef>
#include <span>
#include <vector>

#include "sltaylor/gentaylor.hpp"
#include "sltaylor/grid.hpp"
#include "sltaylor/jet.hpp"

namespace sltaylor {

class TransformMatrix {
 public:
  /// Zero matrix of size (n+1) x (n+1).
  TransformMatrix(std::size_t n, double x0);
  static TransformMatrix identity(std::size_t n, double x0);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }
  double x0() const noexcept { return x0_; }
  Complex operator()(std::size_t k, std::size_t m) const;
  Complex& at(std::size_t k, std::size_t m);
  std::span<const Complex> row(std::size_t k) const;

 private:
  std::size_t n_;
  double x0_;
  std::vector<Complex> entries_;
};

/// Polynomial in the spectral parameter, ascending coefficients, no trailing zeros.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<Complex> coeffs);

  std::span<const Complex> coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Complex coeff(std::size_t p) const noexcept { return p < c_.size() ? c_[p] : Complex{0.0, 0.0}; }
  Complex operator()(Complex lambda) const;

  friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(const LambdaPoly& a, Complex s);

 private:
  std::vector<Complex> c_;
};

/// Jet recursion a_{k,m} = a_{k-1,m}' + phi^{(-1)^m} a_{k-1,m-1}. phi_jet needs order >= n - 1.
TransformMatrix build_A_recursive(const Jet& phi_jet, std::size_t n);
/// Entrywise closed-form binomial sums; slow, meant as an independent check.
TransformMatrix build_A_closed_form(const Jet& phi_jet, std::size_t n);

/// (h(x0), h'(x0), ..., h^{[n]}(x0)) = A gamma.
std::vector<Complex> ordinary_from_generalized(const TransformMatrix& A, const GenDerivativeSequence& gamma);

struct SolutionTaylorVectors {
  /// (u1/f)^{[k]}(x0) as polynomials in lambda, k = 0..n
  std::vector<LambdaPoly> u1;
  /// (u2/f)^{[k]}(x0)
  std::vector<LambdaPoly> u2;
};

SolutionTaylorVectors solution_taylor_vectors(const TransformMatrix& A);

}  // namespace sltaylor
