#include "sltaylor/spps.hpp"

#include <algorithm>
#include <string>

#include "factorial.hpp"

namespace sltaylor {

using detail::inverse_factorial;

std::size_t max_terms(const RecursiveFamily& family) { return (family.order() + 1) / 2; }

namespace {

void require_fits(const RecursiveFamily& family, std::size_t n_terms) {
  if (n_terms == 0) throw OrderError("SPPS truncation needs at least one term");
  if (2 * n_terms - 1 > family.order()) {
    throw OrderError("truncation of " + std::to_string(n_terms) + " terms needs family order " +
                     std::to_string(2 * n_terms - 1) + ", family has " + std::to_string(family.order()));
  }
}

}  // namespace

SppsSolution::SppsSolution(const RecursiveFamily& family, Complex lambda, std::size_t n_terms, SolutionKind kind)
    : family_(&family), lambda_(lambda), n_terms_(n_terms), kind_(kind) {
  require_fits(family, n_terms);
}

// Horner evaluation in lambda of sum_{k=k0}^{N-1} lambda^k F(m(k)) / m(k)!.
template <typename Sampler>
Complex SppsSolution::series(Series which, const Sampler& at) const {
  const RecursiveFamily& fam = *family_;
  const bool first = kind_ == SolutionKind::u1;
  // value:            u1 -> X~(2k), k>=0     u2 -> X(2k+1), k>=0
  // derivative tail:  u1 -> X~(2k-1), k>=1   u2 -> X(2k),   k>=0
  auto index = [&](std::size_t k) -> std::size_t {
    if (which == Series::value) return first ? 2 * k : 2 * k + 1;
    return first ? 2 * k - 1 : 2 * k;
  };
  const std::size_t k0 = (which == Series::derivative_tail && first) ? 1 : 0;

  Complex acc = 0.0;
  for (std::size_t k = n_terms_; k-- > k0;) {
    const std::size_t m = index(k);
    const GridFunction& F = first ? fam.Xt(m) : fam.X(m);
    acc = acc * lambda_ + at(F) * inverse_factorial(m);
  }
  // Horner above accumulates lambda^{k - k0}; restore the common factor.
  if (k0 == 1) acc *= lambda_;
  return acc;
}

Complex SppsSolution::value_at_node(std::size_t i) const {
  const Complex s = series(Series::value, [i](const GridFunction& F) { return F[i]; });
  return family_->seed()[i] * s;
}

Complex SppsSolution::derivative_at_node(std::size_t i) const {
  const Complex f = family_->seed()[i];
  const Complex fp = family_->seed_derivative()[i];
  const Complex s = series(Series::value, [i](const GridFunction& F) { return F[i]; });
  const Complex tail = series(Series::derivative_tail, [i](const GridFunction& F) { return F[i]; });
  return fp * s + tail / f;
}

Complex SppsSolution::value(double x) const {
  const Grid& g = family_->grid();
  const std::size_t c = g.locate(x);
  if (g.node(c) == x) return value_at_node(c);
  if (g.node(c + 1) == x) return value_at_node(c + 1);
  const auto st = interpolation_stencil(g, x);
  auto at = [&st](const GridFunction& F) {
    Complex r = 0.0;
    for (std::size_t j = 0; j < kInterpolationStencil; ++j) r += st.weights[j] * F[st.start + j];
    return r;
  };
  return at(family_->seed()) * series(Series::value, at);
}

Complex SppsSolution::derivative(double x) const {
  const Grid& g = family_->grid();
  const std::size_t c = g.locate(x);
  if (g.node(c) == x) return derivative_at_node(c);
  if (g.node(c + 1) == x) return derivative_at_node(c + 1);
  const auto st = interpolation_stencil(g, x);
  auto at = [&st](const GridFunction& F) {
    Complex r = 0.0;
    for (std::size_t j = 0; j < kInterpolationStencil; ++j) r += st.weights[j] * F[st.start + j];
    return r;
  };
  return at(family_->seed_derivative()) * series(Series::value, at) +
         series(Series::derivative_tail, at) / at(family_->seed());
}

GridFunction SppsSolution::values() const {
  std::vector<Complex> v(family_->grid().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = value_at_node(i);
  return GridFunction(family_->grid_ptr(), std::move(v));
}

GridFunction SppsSolution::derivatives() const {
  std::vector<Complex> v(family_->grid().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = derivative_at_node(i);
  return GridFunction(family_->grid_ptr(), std::move(v));
}

Complex eval_u1(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms) {
  return SppsSolution(family, lambda, n_terms, SolutionKind::u1).value(x);
}

Complex eval_u2(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms) {
  return SppsSolution(family, lambda, n_terms, SolutionKind::u2).value(x);
}

Complex eval_u1_prime(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms) {
  return SppsSolution(family, lambda, n_terms, SolutionKind::u1).derivative(x);
}

Complex eval_u2_prime(const RecursiveFamily& family, Complex lambda, double x, std::size_t n_terms) {
  return SppsSolution(family, lambda, n_terms, SolutionKind::u2).derivative(x);
}

double residual(Complex lambda, const GridFunction& u, const GridFunction& q) {
  if (!u.grid().same_nodes(q.grid())) throw DimensionError("u and q live on different grids");
  const GridFunction upp = second_derivative(u);
  const double scale = 1.0 + std::abs(lambda) * u.max_abs();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    worst = std::max(worst, std::abs(upp[i] + q[i] * u[i] - lambda * u[i]));
  }
  return worst / scale;
}

TruncationChoice choose_truncation(const RecursiveFamily& family, Complex lambda, double tol) {
  if (!(tol > 0.0)) throw ConfigError("truncation tolerance must be positive");
  const std::size_t cap = max_terms(family);
  const std::size_t order = family.order();
  const std::size_t n = family.grid().size();
  const double mag = std::abs(lambda);

  // sup-norms of the k-th terms of both series
  auto term1 = [&](std::size_t k) {
    return std::pow(mag, static_cast<double>(k)) * family.Xt_sup(2 * k) * inverse_factorial(2 * k);
  };
  auto term2 = [&](std::size_t k) {
    return std::pow(mag, static_cast<double>(k)) * family.X_sup(2 * k + 1) * inverse_factorial(2 * k + 1);
  };
  auto exists = [&](std::size_t k) { return 2 * k + 1 <= order; };

  std::vector<Complex> p1(n, Complex{0.0, 0.0});
  std::vector<Complex> p2(n, Complex{0.0, 0.0});
  Complex lk = 1.0;
  for (std::size_t N = 1; N <= cap; ++N) {
    const std::size_t k = N - 1;
    const GridFunction& a = family.Xt(2 * k);
    const GridFunction& b = family.X(2 * k + 1);
    const Complex c1 = lk * inverse_factorial(2 * k);
    const Complex c2 = lk * inverse_factorial(2 * k + 1);
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p1[i] += c1 * a[i];
      p2[i] += c2 * b[i];
      s1 = std::max(s1, std::abs(p1[i]));
      s2 = std::max(s2, std::abs(p2[i]));
    }
    lk *= lambda;

    if (!exists(N + 1)) break;
    const double t1 = std::max(term1(N), term1(N + 1));
    const double t2 = std::max(term2(N), term2(N + 1));
    if (t1 <= tol * s1 && t2 <= tol * s2) return {N, false};
  }
  return {cap, true};
}

GridFunction quotient_gen_derivative(const RecursiveFamily& family, Complex lambda, SolutionKind kind,
                                     std::size_t j, std::size_t n_terms) {
  require_fits(family, n_terms);
  const bool first = kind == SolutionKind::u1;
  std::vector<Complex> out(family.grid().size(), Complex{0.0, 0.0});
  Complex lk = 1.0;
  for (std::size_t k = 0; k < n_terms; ++k, lk *= lambda) {
    const std::size_t m = first ? 2 * k : 2 * k + 1;
    if (m < j) continue;
    const GridFunction& F = first ? family.Xt(m - j) : family.X(m - j);
    const Complex c = lk * inverse_factorial(m - j);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * F[i];
  }
  return GridFunction(family.grid_ptr(), std::move(out));
}

}  // namespace sltaylor
