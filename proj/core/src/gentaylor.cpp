#include "sltaylor/gentaylor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <string>

#include "factorial.hpp"

namespace sltaylor {

std::vector<Complex> gamma_from_jets(const Jet& h, const Jet& phi, std::size_t n) {
  if (h.order() < n) throw OrderError("jet of h has order " + std::to_string(h.order()) + ", need " + std::to_string(n));
  if (n > 0 && phi.order() + 1 < n) {
    throw OrderError("jet of phi has order " + std::to_string(phi.order()) + ", need " + std::to_string(n - 1));
  }
  std::vector<Complex> out(n + 1);
  Jet g = h.truncated(n);
  out[0] = g.value();
  if (n == 0) return out;
  const Jet phi_n = phi.truncated(n - 1);
  const Jet inv_phi = jet_reciprocal(phi_n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Jet d = jet_derive(g);
    const Jet& w = (k % 2 == 1) ? phi_n : inv_phi;
    g = d * w.truncated(d.order());
    out[k] = g.value();
  }
  return out;
}

namespace {

void require_family_grid(const GridFunction& h, const RecursiveFamily& family) {
  if (!h.grid().same_nodes(family.grid())) throw DimensionError("function and family live on different grids");
}

struct GammaContext {
  ChebyshevFit h_fit;
  ChebyshevFit phi_fit;
  bool fits_converged;
};

GammaContext make_context(const GridFunction& h, const RecursiveFamily& family, const GammaOptions& options) {
  ChebyshevFit hf(h, options.fit);
  ChebyshevFit pf(family.phi(), options.fit);
  const bool ok = hf.converged() && (options.phi_jet.has_value() || pf.converged());
  return {std::move(hf), std::move(pf), ok};
}

Jet phi_jet_at_anchor(const GammaContext& ctx, const RecursiveFamily& family, std::size_t order,
                      const GammaOptions& options) {
  if (!options.phi_jet) return ctx.phi_fit.jet_at(family.x0(), order);
  const Jet& p = *options.phi_jet;
  if (p.anchor() != family.x0()) throw AnchorError("supplied phi jet is not anchored at the family anchor");
  if (p.order() < order) throw OrderError("supplied phi jet has order " + std::to_string(p.order()));
  return p.truncated(order);
}

}  // namespace

GenDerivativeSequence gamma_seq(const GridFunction& h, const RecursiveFamily& family, std::size_t n,
                                const GammaOptions& options) {
  require_family_grid(h, family);
  const GammaContext ctx = make_context(h, family, options);
  const Jet hj = ctx.h_fit.jet_at(family.x0(), n);
  const Jet pj = phi_jet_at_anchor(ctx, family, n > 0 ? n - 1 : 0, options);
  GenDerivativeSequence seq;
  seq.values = gamma_from_jets(hj, pj, n);
  seq.values[0] = h[family.anchor_index()];
  seq.x0 = family.x0();
  seq.reduced_accuracy = n > options.safe_depth || !ctx.fits_converged;
  return seq;
}

GenPolynomial::GenPolynomial(const RecursiveFamily& family, std::vector<Complex> alpha)
    : family_(&family), alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw ConfigError("generalized polynomial needs at least one coefficient");
  if (alpha_.size() - 1 > family.order()) {
    throw OrderError("generalized polynomial of order " + std::to_string(alpha_.size() - 1) +
                     " exceeds family order " + std::to_string(family.order()));
  }
  for (const Complex& a : alpha_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw NumericalError("non-finite coefficient");
  }
}

Complex GenPolynomial::operator()(double x) const {
  Complex s = 0.0;
  for (std::size_t k = 0; k < alpha_.size(); ++k) {
    if (alpha_[k] != Complex{0.0, 0.0}) s += alpha_[k] * interpolate(family_->psi(k), x);
  }
  return s;
}

GridFunction GenPolynomial::on_grid() const {
  std::vector<Complex> v(family_->grid().size(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < alpha_.size(); ++k) {
    const GridFunction& p = family_->psi(k);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += alpha_[k] * p[i];
  }
  return GridFunction(family_->grid_ptr(), std::move(v));
}

GenPolynomial gen_taylor_coeffs(const GridFunction& h, const RecursiveFamily& family, std::size_t n,
                                const GammaOptions& options) {
  GenDerivativeSequence seq = gamma_seq(h, family, n, options);
  for (std::size_t k = 0; k <= n; ++k) seq.values[k] *= detail::inverse_factorial(k);
  return GenPolynomial(family, std::move(seq.values));
}

Complex eval_gen_polynomial(const GenPolynomial& p, double x) { return p(x); }

RemainderReport remainder_check(const GridFunction& h, const RecursiveFamily& family, std::size_t n,
                                std::span<const double> sample_points, const RemainderOptions& options) {
  require_family_grid(h, family);
  const double x0 = family.x0();
  for (double x : sample_points) {
    if (x < x0) throw DomainError("remainder bound only holds to the right of x0, got x = " + std::to_string(x));
  }
  const GridFunction& psi_next = family.psi(n + 1);
  const GenPolynomial p = gen_taylor_coeffs(h, family, n, options.gamma);

  const Grid& grid = family.grid();
  const std::size_t i0 = family.anchor_index();
  std::vector<double> running(grid.size(), 0.0);
  RemainderReport report;
  report.n = n;
  report.reduced_accuracy = n + 1 > options.gamma.safe_depth;
  if (options.gamma_next) {
    require_family_grid(*options.gamma_next, family);
    double m = 0.0;
    for (std::size_t i = i0; i < grid.size(); ++i) running[i] = m = std::max(m, std::abs((*options.gamma_next)[i]));
  } else {
    const GammaContext ctx = make_context(h, family, options.gamma);
    report.reduced_accuracy = report.reduced_accuracy || !ctx.fits_converged;
    double m = 0.0;
    for (std::size_t i = i0; i < grid.size(); ++i) {
      const double x = grid.node(i);
      const auto g = gamma_from_jets(ctx.h_fit.jet_at(x, n + 1), ctx.phi_fit.jet_at(x, n), n + 1);
      running[i] = m = std::max(m, std::abs(g[n + 1]));
    }
  }

  const double inv_fact = detail::inverse_factorial(n + 1);
  report.max_slack = std::numeric_limits<double>::infinity();
  for (double x : sample_points) {
    const std::size_t c = grid.locate(x);
    const std::size_t upper = grid.node(c) == x ? c : c + 1;
    RemainderPoint pt;
    pt.x = x;
    pt.error = std::abs(interpolate(h, x) - p(x));
    pt.bound = running[std::max(upper, i0)] * std::abs(interpolate(psi_next, x)) * inv_fact;
    report.points.push_back(pt);
    report.max_slack = std::min(report.max_slack, pt.bound - pt.error);
    if (pt.error > pt.bound * (1.0 + options.rel_tol) + options.abs_tol) {
      report.violations.push_back(pt);
      report.passed = false;
    }
  }
  if (sample_points.empty()) report.max_slack = 0.0;
  return report;
}

std::vector<std::size_t> basis_indices(BasisSelection which, std::size_t n_functions) {
  std::vector<std::size_t> idx(n_functions);
  for (std::size_t j = 0; j < n_functions; ++j) {
    switch (which) {
      case BasisSelection::even: idx[j] = 2 * j; break;
      case BasisSelection::odd: idx[j] = 2 * j + 1; break;
      case BasisSelection::full: idx[j] = j; break;
    }
  }
  return idx;
}

Projection least_squares_project(const GridFunction& h, const RecursiveFamily& family, std::size_t n_functions,
                                 BasisSelection which) {
  require_family_grid(h, family);
  if (n_functions == 0) throw ConfigError("projection needs at least one basis function");
  Projection out;
  out.indices = basis_indices(which, n_functions);
  if (out.indices.back() > family.order()) {
    throw OrderError("basis index " + std::to_string(out.indices.back()) + " exceeds family order " +
                     std::to_string(family.order()));
  }
  const std::size_t n = h.size();
  const std::vector<double> w = trapezoid_weights(family.grid());
  std::vector<GridFunction> basis;
  basis.reserve(n_functions);
  for (std::size_t k : out.indices) basis.push_back(family.phi_k(k));

  Eigen::MatrixXcd A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n_functions));
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::sqrt(w[i]);
    const auto r = static_cast<Eigen::Index>(i);
    for (std::size_t j = 0; j < n_functions; ++j) A(r, static_cast<Eigen::Index>(j)) = s * basis[j][i];
    rhs(r) = s * h[i];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
  if (static_cast<std::size_t>(qr.rank()) < n_functions) {
    throw NumericalError("least squares basis collapsed to rank " + std::to_string(qr.rank()) + " of " +
                         std::to_string(n_functions));
  }
  const Eigen::VectorXcd c = qr.solve(rhs);
  const auto& R = qr.matrixR();
  const auto last = static_cast<Eigen::Index>(n_functions - 1);
  out.condition_estimate = std::abs(R(0, 0)) / std::abs(R(last, last));

  out.coefficients.resize(n_functions);
  for (std::size_t j = 0; j < n_functions; ++j) out.coefficients[j] = c(static_cast<Eigen::Index>(j));
  double l2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex r = h[i];
    for (std::size_t j = 0; j < n_functions; ++j) r -= out.coefficients[j] * basis[j][i];
    const double a = std::abs(r);
    l2 += w[i] * a * a;
    out.max_error = std::max(out.max_error, a);
  }
  out.l2_error = std::sqrt(l2);
  return out;
}

}  // namespace sltaylor
