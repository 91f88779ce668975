#include "sltaylor/chebfit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <string>

#include "factorial.hpp"

namespace sltaylor {

namespace {

constexpr double kPlateauCeiling = 1e-13;

Complex clenshaw(std::span<const Complex> c, double t) {
  Complex b1 = 0.0;
  Complex b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const Complex b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

std::vector<Complex> chebyshev_derivative(std::span<const Complex> c) {
  const std::size_t n = c.size();
  if (n <= 1) return {Complex{0.0, 0.0}};
  std::vector<Complex> d(n + 1, Complex{0.0, 0.0});
  for (std::size_t k = n - 1; k-- > 0;) d[k] = d[k + 2] + 2.0 * static_cast<double>(k + 1) * c[k + 1];
  d[0] *= 0.5;
  d.resize(n - 1);
  return d;
}

}  // namespace

ChebyshevFit::ChebyshevFit(const GridFunction& g, const ChebyshevFitOptions& options)
    : lo_(g.grid().a()), hi_(g.grid().b()) {
  const std::size_t n = g.size();
  if (n < 2) throw ConfigError("Chebyshev fit needs at least two nodes");
  const std::size_t degree = std::min(options.max_degree, n / 2 > 0 ? n / 2 - 1 : 0);
  const std::size_t cols = degree + 1;

  Eigen::MatrixXd V(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols));
  Eigen::MatrixXd rhs(static_cast<Eigen::Index>(n), 2);
  const auto nodes = g.grid().nodes();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (2.0 * nodes[i] - lo_ - hi_) / (hi_ - lo_);
    const auto r = static_cast<Eigen::Index>(i);
    double tkm1 = 1.0;
    double tk = t;
    V(r, 0) = 1.0;
    if (cols > 1) V(r, 1) = t;
    for (std::size_t k = 2; k < cols; ++k) {
      const double next = 2.0 * t * tk - tkm1;
      tkm1 = tk;
      tk = next;
      V(r, static_cast<Eigen::Index>(k)) = next;
    }
    rhs(r, 0) = g[i].real();
    rhs(r, 1) = g[i].imag();
  }
  auto solve = [&](std::size_t m) {
    const Eigen::MatrixXd sol = V.leftCols(static_cast<Eigen::Index>(m)).householderQr().solve(rhs);
    std::vector<Complex> out(m);
    for (std::size_t k = 0; k < m; ++k) {
      out[k] = {sol(static_cast<Eigen::Index>(k), 0), sol(static_cast<Eigen::Index>(k), 1)};
    }
    return out;
  };
  std::vector<Complex> c = solve(cols);
  double cmax = 0.0;
  for (const Complex& v : c) cmax = std::max(cmax, std::abs(v));

  // noise plateau: median magnitude of the last quarter of the coefficients
  double floor = options.tail_tolerance * cmax;
  if (cols >= 16) {
    std::vector<double> tail;
    for (std::size_t k = cols - cols / 4; k < cols; ++k) tail.push_back(std::abs(c[k]));
    std::nth_element(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(tail.size() / 2), tail.end());
    const double plateau = 4.0 * tail[tail.size() / 2];
    if (plateau <= kPlateauCeiling * cmax) floor = std::max(floor, plateau);
  }
  std::size_t keep = cols;
  for (std::size_t k = 0; k + 2 < cols; ++k) {
    if (std::abs(c[k]) <= floor && std::abs(c[k + 1]) <= floor && std::abs(c[k + 2]) <= floor) {
      keep = std::max<std::size_t>(k, 1);
      converged_ = true;
      break;
    }
  }
  coeffs_ = keep < cols ? solve(keep) : std::move(c);

  for (std::size_t i = 0; i < n; ++i) max_residual_ = std::max(max_residual_, std::abs((*this)(nodes[i]) - g[i]));
}

Complex ChebyshevFit::operator()(double x) const {
  return clenshaw(coeffs_, (2.0 * x - lo_ - hi_) / (hi_ - lo_));
}

Jet ChebyshevFit::jet_at(double x, std::size_t order) const {
  if (x < lo_ || x > hi_) throw DomainError("jet requested outside the fitted interval");
  const double t = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
  const double scale = 2.0 / (hi_ - lo_);
  std::vector<Complex> out(order + 1);
  std::vector<Complex> c = coeffs_;
  double s = 1.0;
  for (std::size_t j = 0; j <= order; ++j) {
    out[j] = clenshaw(c, t) * s * detail::inverse_factorial(j);
    c = chebyshev_derivative(c);
    s *= scale;
  }
  return Jet(x, std::move(out));
}

ApproximateJet jet_from_grid(const GridFunction& g, std::size_t node, std::size_t order,
                             const ChebyshevFitOptions& options) {
  if (node >= g.size()) throw ConfigError("node index " + std::to_string(node) + " out of range");
  const ChebyshevFit fit(g, options);
  return {fit.jet_at(g.grid().node(node), order), true, fit.converged()};
}

}  // namespace sltaylor
