#include "sltaylor/transform.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "factorial.hpp"

namespace sltaylor {

TransformMatrix::TransformMatrix(std::size_t n, double x0)
    : n_(n), x0_(x0), entries_((n + 1) * (n + 1), Complex{0.0, 0.0}) {}

TransformMatrix TransformMatrix::identity(std::size_t n, double x0) {
  TransformMatrix A(n, x0);
  for (std::size_t k = 0; k <= n; ++k) A.at(k, k) = 1.0;
  return A;
}

Complex TransformMatrix::operator()(std::size_t k, std::size_t m) const {
  if (k > n_ || m > n_) throw DimensionError("matrix index out of range");
  return entries_[k * (n_ + 1) + m];
}

Complex& TransformMatrix::at(std::size_t k, std::size_t m) {
  if (k > n_ || m > n_) throw DimensionError("matrix index out of range");
  return entries_[k * (n_ + 1) + m];
}

std::span<const Complex> TransformMatrix::row(std::size_t k) const {
  if (k > n_) throw DimensionError("matrix row out of range");
  return std::span<const Complex>(entries_).subspan(k * (n_ + 1), n_ + 1);
}

LambdaPoly::LambdaPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  for (const Complex& c : c_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw NumericalError("non-finite polynomial coefficient");
  }
  while (!c_.empty() && c_.back() == Complex{0.0, 0.0}) c_.pop_back();
}

Complex LambdaPoly::operator()(Complex lambda) const {
  Complex acc = 0.0;
  for (std::size_t p = c_.size(); p-- > 0;) acc = acc * lambda + c_[p];
  return acc;
}

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
  std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), Complex{0.0, 0.0});
  for (std::size_t p = 0; p < c.size(); ++p) c[p] = a.coeff(p) + b.coeff(p);
  return LambdaPoly(std::move(c));
}

LambdaPoly operator*(const LambdaPoly& a, Complex s) {
  std::vector<Complex> c = a.c_;
  for (Complex& v : c) v *= s;
  return LambdaPoly(std::move(c));
}

namespace {

void require_budget(const Jet& phi_jet, std::size_t n) {
  if (n > 0 && phi_jet.order() + 1 < n) {
    throw OrderError("A_" + std::to_string(n) + " needs a phi jet of order " + std::to_string(n - 1) + ", got " +
                     std::to_string(phi_jet.order()));
  }
}

}  // namespace

TransformMatrix build_A_recursive(const Jet& phi_jet, std::size_t n) {
  require_budget(phi_jet, n);
  const double x0 = phi_jet.anchor();
  TransformMatrix A(n, x0);
  A.at(0, 0) = 1.0;
  if (n == 0) return A;

  const Jet phi = phi_jet.truncated(n - 1);
  const Jet inv_phi = jet_reciprocal(phi);
  // previous row of jets, entry m has order n - (k-1)
  std::vector<std::optional<Jet>> prev(n + 1);
  prev[0] = Jet::constant(x0, 1.0, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t order = n - k;
    std::vector<std::optional<Jet>> cur(n + 1);
    for (std::size_t m = 1; m <= k; ++m) {
      const Jet& w = (m % 2 == 1) ? inv_phi : phi;
      Jet entry = Jet::constant(x0, 0.0, order);
      if (prev[m - 1]) entry = prev[m - 1]->truncated(order) * w.truncated(order);
      if (m < k) entry = entry + jet_derive(*prev[m]);
      A.at(k, m) = entry.value();
      cur[m] = std::move(entry);
    }
    prev = std::move(cur);
  }
  return A;
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<double>(r);
}

// Raw derivatives of phi and 1/phi at x0.
struct WeightDerivatives {
  std::vector<Complex> phi;
  std::vector<Complex> inv_phi;

  // weight of position i in the alternating chain: phi for odd i, 1/phi for even i
  Complex weight(std::size_t i, std::size_t j) const { return (i % 2 == 1) ? phi.at(j) : inv_phi.at(j); }
};

Complex chain(const WeightDerivatives& d, std::size_t i, std::size_t m, std::size_t kprev) {
  if (i == m) return d.weight(m, kprev - 1);
  Complex s = 0.0;
  for (std::size_t ki = m - i; ki + 1 <= kprev; ++ki) {
    s += binomial(kprev - 1, ki) * d.weight(i, kprev - 1 - ki) * chain(d, i + 1, m, ki);
  }
  return s;
}

// b_{k,m}: b_{k,0} = [k = 0], b_{k,m} for m >= 1 by the nested alternating sums
Complex b_coeff(const WeightDerivatives& d, std::size_t k, std::size_t m) {
  if (m == 0) return k == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  if (k < m) return 0.0;
  return chain(d, 1, m, k);
}

}  // namespace

TransformMatrix build_A_closed_form(const Jet& phi_jet, std::size_t n) {
  require_budget(phi_jet, n);
  TransformMatrix A(n, phi_jet.anchor());
  A.at(0, 0) = 1.0;
  if (n == 0) return A;

  const Jet phi = phi_jet.truncated(n - 1);
  const Jet inv_phi = jet_reciprocal(phi);
  WeightDerivatives d;
  for (std::size_t j = 0; j < n; ++j) {
    d.phi.push_back(phi.derivative_value(j));
    d.inv_phi.push_back(inv_phi.derivative_value(j));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    A.at(k, 1) = d.inv_phi[k - 1];
    for (std::size_t m = 2; m <= k; ++m) {
      Complex s = 0.0;
      for (std::size_t j = m - 1; j <= k - 1; ++j) s += binomial(k - 1, j) * d.inv_phi[k - 1 - j] * b_coeff(d, j, m - 1);
      A.at(k, m) = s;
    }
  }
  return A;
}

std::vector<Complex> ordinary_from_generalized(const TransformMatrix& A, const GenDerivativeSequence& gamma) {
  if (gamma.values.size() != A.size()) {
    throw DimensionError("matrix of size " + std::to_string(A.size()) + " applied to " +
                         std::to_string(gamma.values.size()) + " generalized derivatives");
  }
  std::vector<Complex> out(A.size(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < A.size(); ++k) {
    for (std::size_t m = 0; m <= k; ++m) out[k] += A(k, m) * gamma.values[m];
  }
  return out;
}

SolutionTaylorVectors solution_taylor_vectors(const TransformMatrix& A) {
  SolutionTaylorVectors out;
  for (std::size_t k = 0; k < A.size(); ++k) {
    std::vector<Complex> c1;
    std::vector<Complex> c2;
    for (std::size_t m = 0; m <= k; ++m) {
      (m % 2 == 0 ? c1 : c2).push_back(A(k, m));
    }
    out.u1.emplace_back(std::move(c1));
    out.u2.emplace_back(std::move(c2));
  }
  return out;
}

}  // namespace sltaylor
