#include "sltaylor/grid.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Dense>

#include "fornberg.hpp"

namespace sltaylor {

namespace {

template <std::size_t Width>
std::size_t centred_start(std::size_t i, std::size_t n) {
  const std::size_t half = Width / 2;
  const std::size_t start = i >= half ? i - half : 0;
  return std::min(start, n - Width);
}

// Weights integrating the degree-5 interpolant over one cell, by moment matching
// in the local variable t = (x - x_i) / h.
Stencil<kQuadratureStencil> cell_quadrature(std::span<const double> x, std::size_t cell) {
  constexpr std::size_t W = kQuadratureStencil;
  Stencil<W> rule;
  rule.start = std::min(cell >= 2 ? cell - 2 : 0, x.size() - W);
  const double h = x[cell + 1] - x[cell];

  Eigen::Matrix<double, W, W> vt;
  Eigen::Matrix<double, W, 1> moments;
  for (std::size_t p = 0; p < W; ++p) {
    moments(p) = 1.0 / static_cast<double>(p + 1);
    for (std::size_t j = 0; j < W; ++j) {
      vt(p, j) = std::pow((x[rule.start + j] - x[cell]) / h, static_cast<double>(p));
    }
  }
  const Eigen::Matrix<double, W, 1> w = vt.fullPivLu().solve(moments);
  for (std::size_t j = 0; j < W; ++j) rule.weights[j] = w(j) * h;
  return rule;
}

}  // namespace

Grid::Grid(std::vector<double> nodes, std::size_t anchor_index)
    : nodes_(std::move(nodes)), anchor_(anchor_index) {
  if (nodes_.size() < 2) throw ConfigError("grid needs at least two nodes");
  if (anchor_ >= nodes_.size()) throw ConfigError("anchor index outside the grid");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw ConfigError("non-finite grid node " + std::to_string(i));
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw ConfigError("grid nodes must be strictly increasing (node " + std::to_string(i) + ")");
    }
  }

  const std::size_t n = nodes_.size();
  const double h0 = (b() - a()) / static_cast<double>(n - 1);
  uniform_ = true;
  for (std::size_t i = 1; i < n && uniform_; ++i) {
    uniform_ = std::abs(nodes_[i] - nodes_[i - 1] - h0) <= 1e-9 * h0;
  }

  if (n >= kQuadratureStencil) {
    cell_rules_.reserve(n - 1);
    for (std::size_t c = 0; c + 1 < n; ++c) cell_rules_.push_back(cell_quadrature(nodes_, c));
  }
  if (n >= kDerivativeStencil) {
    d1_rules_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Stencil<kDerivativeStencil> s;
      s.start = centred_start<kDerivativeStencil>(i, n);
      s.weights = detail::fornberg_weights<kDerivativeStencil>(
          nodes_[i], std::span<const double>(nodes_).subspan(s.start, kDerivativeStencil), 1);
      d1_rules_.push_back(s);
    }
  }
  if (n >= 6) {
    d2_rules_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Stencil<6> s;
      const bool interior = i >= 2 && i + 2 < n;
      if (interior) {
        // centred five points, sixth weight zero
        s.start = i - 2;
        const auto w = detail::fornberg_weights<5>(nodes_[i], std::span<const double>(nodes_).subspan(s.start, 5), 2);
        std::copy(w.begin(), w.end(), s.weights.begin());
        s.weights[5] = 0.0;
      } else {
        s.start = centred_start<6>(i, n);
        s.weights = detail::fornberg_weights<6>(nodes_[i], std::span<const double>(nodes_).subspan(s.start, 6), 2);
      }
      d2_rules_.push_back(s);
    }
  }
}

GridPtr Grid::uniform(double a, double b, std::size_t n_nodes) { return uniform(a, b, n_nodes, a); }

GridPtr Grid::uniform(double a, double b, std::size_t n_nodes, double x0) {
  if (!(a < b)) throw ConfigError("grid interval requires a < b");
  if (n_nodes < 2) throw ConfigError("grid needs at least two nodes");
  if (!(x0 >= a && x0 <= b)) throw ConfigError("anchor x0 must lie in [a,b]");
  const double h = (b - a) / static_cast<double>(n_nodes - 1);
  std::vector<double> nodes(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) nodes[i] = a + static_cast<double>(i) * h;
  nodes.back() = b;

  const double pos = (x0 - a) / h;
  const auto idx = static_cast<std::size_t>(std::llround(pos));
  if (std::abs(pos - static_cast<double>(idx)) > 1e-9) {
    throw ConfigError("anchor x0 = " + std::to_string(x0) + " is not a node of the uniform grid with " +
                      std::to_string(n_nodes) + " nodes on [" + std::to_string(a) + ", " + std::to_string(b) +
                      "]");
  }
  nodes[idx] = x0;
  return std::make_shared<const Grid>(std::move(nodes), idx);
}

GridPtr Grid::from_nodes(std::vector<double> nodes, std::size_t anchor_index) {
  return std::make_shared<const Grid>(std::move(nodes), anchor_index);
}

std::size_t Grid::locate(double x) const {
  if (!(x >= a() && x <= b())) {
    throw DomainError("x = " + std::to_string(x) + " outside [" + std::to_string(a()) + ", " +
                      std::to_string(b()) + "]");
  }
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  auto i = static_cast<std::size_t>(std::distance(nodes_.begin(), it));
  if (i == 0) return 0;
  return std::min(i - 1, nodes_.size() - 2);
}

std::optional<std::size_t> Grid::find_node(double x, double tol) const {
  if (x < a() - tol || x > b() + tol) return std::nullopt;
  const std::size_t c = locate(std::clamp(x, a(), b()));
  for (std::size_t i : {c, c + 1}) {
    if (i < nodes_.size() && std::abs(nodes_[i] - x) <= tol) return i;
  }
  return std::nullopt;
}

bool Grid::same_nodes(const Grid& other) const noexcept {
  return this == &other || nodes_ == other.nodes_;
}

// ---------------------------------------------------------------------------

GridFunction::GridFunction(GridPtr grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw ConfigError("grid function without a grid");
  if (values_.size() != grid_->size()) {
    throw DimensionError("grid function has " + std::to_string(values_.size()) + " values for " +
                         std::to_string(grid_->size()) + " nodes");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw SamplingError("non-finite grid function value", i, grid_->node(i));
    }
  }
}

GridFunction GridFunction::constant(GridPtr grid, Complex value) {
  const std::size_t n = grid->size();
  return GridFunction(std::move(grid), std::vector<Complex>(n, value));
}

GridFunction GridFunction::identity(GridPtr grid) {
  std::vector<Complex> v(grid->nodes().begin(), grid->nodes().end());
  return GridFunction(std::move(grid), std::move(v));
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::max_abs_on(double lo, double hi) const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double x = grid_->node(i);
    if (x >= lo && x <= hi) m = std::max(m, std::abs(values_[i]));
  }
  return m;
}

void GridFunction::require_same_grid(const GridFunction& other) const {
  if (!grid_->same_nodes(*other.grid_)) throw DimensionError("grid functions live on different grids");
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(const GridFunction& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex s) {
  for (Complex& v : values_) v *= s;
  return *this;
}

GridFunction operator/(const GridFunction& lhs, const GridFunction& rhs) {
  lhs.require_same_grid(rhs);
  std::vector<Complex> out(lhs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.values_[i] / rhs.values_[i];
  return GridFunction(lhs.grid_, std::move(out));
}

GridFunction GridFunction::operator-() const {
  GridFunction r = *this;
  for (Complex& v : r.values_) v = -v;
  return r;
}

GridFunction GridFunction::reciprocal() const {
  std::vector<Complex> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 / values_[i];
  return GridFunction(grid_, std::move(out));
}

// ---------------------------------------------------------------------------

GridFunction cumulative_integral(const GridFunction& g) {
  return cumulative_integral(g, g.grid().anchor_index());
}

GridFunction cumulative_integral(const GridFunction& g, std::size_t anchor_index) {
  const Grid& grid = g.grid();
  if (!grid.has_quadrature()) {
    throw ConfigError("cumulative integral needs at least " + std::to_string(kQuadratureStencil) +
                      " nodes, grid has " + std::to_string(grid.size()));
  }
  if (anchor_index >= grid.size()) throw ConfigError("integration anchor outside the grid");

  const auto v = g.values();
  auto cell = [&](std::size_t c) {
    const auto& rule = grid.cell_rule(c);
    Complex s = 0.0;
    for (std::size_t j = 0; j < kQuadratureStencil; ++j) s += rule.weights[j] * v[rule.start + j];
    return s;
  };

  std::vector<Complex> out(grid.size(), Complex{0.0, 0.0});
  for (std::size_t i = anchor_index; i + 1 < grid.size(); ++i) out[i + 1] = out[i] + cell(i);
  for (std::size_t i = anchor_index; i > 0; --i) out[i - 1] = out[i] - cell(i - 1);
  return GridFunction(g.grid_ptr(), std::move(out));
}

GridFunction derivative(const GridFunction& g) {
  const Grid& grid = g.grid();
  if (!grid.has_derivative()) {
    throw ConfigError("derivative needs at least " + std::to_string(kDerivativeStencil) + " nodes");
  }
  const auto v = g.values();
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& r = grid.first_derivative_rule(i);
    Complex s = 0.0;
    for (std::size_t j = 0; j < kDerivativeStencil; ++j) s += r.weights[j] * v[r.start + j];
    out[i] = s;
  }
  return GridFunction(g.grid_ptr(), std::move(out));
}

GridFunction second_derivative(const GridFunction& g) {
  const Grid& grid = g.grid();
  if (!grid.has_second_derivative()) throw ConfigError("second derivative needs at least 6 nodes");
  const auto v = g.values();
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& r = grid.second_derivative_rule(i);
    Complex s = 0.0;
    for (std::size_t j = 0; j < 6; ++j) s += r.weights[j] * v[r.start + j];
    out[i] = s;
  }
  return GridFunction(g.grid_ptr(), std::move(out));
}

Stencil<kInterpolationStencil> interpolation_stencil(const Grid& grid, double x) {
  if (grid.size() < kInterpolationStencil) {
    throw ConfigError("interpolation needs at least " + std::to_string(kInterpolationStencil) + " nodes");
  }
  const std::size_t c = grid.locate(x);
  Stencil<kInterpolationStencil> s;
  s.start = std::min(c >= 2 ? c - 2 : 0, grid.size() - kInterpolationStencil);
  s.weights = detail::fornberg_weights<kInterpolationStencil>(
      x, grid.nodes().subspan(s.start, kInterpolationStencil), 0);
  return s;
}

Complex interpolate(const GridFunction& g, double x) {
  const Grid& grid = g.grid();
  const std::size_t c = grid.locate(x);
  if (grid.node(c) == x) return g[c];
  if (grid.node(c + 1) == x) return g[c + 1];
  const auto s = interpolation_stencil(grid, x);
  Complex r = 0.0;
  for (std::size_t j = 0; j < kInterpolationStencil; ++j) r += s.weights[j] * g[s.start + j];
  return r;
}

std::vector<double> trapezoid_weights(const Grid& grid) {
  const auto x = grid.nodes();
  std::vector<double> w(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = 0.5 * (x[i + 1] - x[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

}  // namespace sltaylor
