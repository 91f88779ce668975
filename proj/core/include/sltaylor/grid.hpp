#pragma once

/// \file
/// Sampled complex-valued functions on a 1-D grid over [a,b], with the
/// cumulative quadrature, differentiation and interpolation operators that
/// every recursive integral is built from.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "sltaylor/errors.hpp"

namespace sltaylor {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultNodeCount = 5001;

/// Points per cell of the cumulative Newton-Cotes rule (degree-5 exact, global order 6).
inline constexpr std::size_t kQuadratureStencil = 6;
/// Points per first-derivative stencil (order 4 everywhere).
inline constexpr std::size_t kDerivativeStencil = 5;
/// Points per interpolation stencil (degree-5 local Lagrange).
inline constexpr std::size_t kInterpolationStencil = 6;

class Grid;
using GridPtr = std::shared_ptr<const Grid>;

/// Precomputed weights of a local linear stencil: sum_j weights[j] * g[start + j].
template <std::size_t Width>
struct Stencil {
  std::size_t start = 0;
  std::array<double, Width> weights{};
};

/// Strictly increasing nodes with a distinguished anchor node x0.
///
/// The anchor is the default lower limit of every cumulative integral. It is
/// always a node so that G(x0) = 0 holds exactly.
class Grid {
 public:
  Grid(std::vector<double> nodes, std::size_t anchor_index);

  /// Uniform grid anchored at a.
  static GridPtr uniform(double a, double b, std::size_t n_nodes = kDefaultNodeCount);
  /// Uniform grid anchored at x0, which must coincide with a node (to 1e-9 of a cell).
  static GridPtr uniform(double a, double b, std::size_t n_nodes, double x0);
  static GridPtr from_nodes(std::vector<double> nodes, std::size_t anchor_index);

  double a() const noexcept { return nodes_.front(); }
  double b() const noexcept { return nodes_.back(); }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double node(std::size_t i) const { return nodes_.at(i); }
  std::size_t anchor_index() const noexcept { return anchor_; }
  double x0() const noexcept { return nodes_[anchor_]; }
  bool is_uniform() const noexcept { return uniform_; }

  /// Index i of the cell [x_i, x_{i+1}] containing x. Throws DomainError outside [a,b].
  std::size_t locate(double x) const;
  /// Index of the node equal to x within tol, if any.
  std::optional<std::size_t> find_node(double x, double tol = 0.0) const;

  bool same_nodes(const Grid& other) const noexcept;

  bool has_quadrature() const noexcept { return !cell_rules_.empty(); }
  bool has_derivative() const noexcept { return !d1_rules_.empty(); }
  bool has_second_derivative() const noexcept { return !d2_rules_.empty(); }

  /// Integral over cell [x_i, x_{i+1}].
  const Stencil<kQuadratureStencil>& cell_rule(std::size_t cell) const { return cell_rules_.at(cell); }
  const Stencil<kDerivativeStencil>& first_derivative_rule(std::size_t i) const { return d1_rules_.at(i); }
  const Stencil<6>& second_derivative_rule(std::size_t i) const { return d2_rules_.at(i); }

 private:
  std::vector<double> nodes_;
  std::size_t anchor_;
  bool uniform_ = false;
  std::vector<Stencil<kQuadratureStencil>> cell_rules_;
  std::vector<Stencil<kDerivativeStencil>> d1_rules_;
  std::vector<Stencil<6>> d2_rules_;
};

/// Complex values, one per node of a shared grid. Values are always finite.
class GridFunction {
 public:
  GridFunction(GridPtr grid, std::vector<Complex> values);

  static GridFunction constant(GridPtr grid, Complex value);
  /// The identity x -> x on the grid.
  static GridFunction identity(GridPtr grid);

  const Grid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex at_anchor() const { return values_[grid_->anchor_index()]; }

  double max_abs() const noexcept;
  /// max |g| over nodes x_i with lo <= x_i <= hi.
  double max_abs_on(double lo, double hi) const noexcept;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(const GridFunction& other);
  GridFunction& operator*=(Complex s);

  friend GridFunction operator+(GridFunction lhs, const GridFunction& rhs) { return lhs += rhs; }
  friend GridFunction operator-(GridFunction lhs, const GridFunction& rhs) { return lhs -= rhs; }
  friend GridFunction operator*(GridFunction lhs, const GridFunction& rhs) { return lhs *= rhs; }
  friend GridFunction operator*(GridFunction lhs, Complex s) { return lhs *= s; }
  friend GridFunction operator*(Complex s, GridFunction rhs) { return rhs *= s; }
  friend GridFunction operator/(const GridFunction& lhs, const GridFunction& rhs);
  GridFunction operator-() const;

  /// Pointwise 1/g.
  GridFunction reciprocal() const;

 private:
  void require_same_grid(const GridFunction& other) const;

  GridPtr grid_;
  std::vector<Complex> values_;
};

/// Pointwise evaluation. Throws SamplingError naming the first non-finite node.
template <typename Fn>
GridFunction sample(const Fn& fn, const GridPtr& grid) {
  std::vector<Complex> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = grid->node(i);
    const Complex v = static_cast<Complex>(fn(x));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw SamplingError("non-finite sample", i, x);
    }
    values[i] = v;
  }
  return GridFunction(grid, std::move(values));
}

/// G(x) = integral from the grid anchor to x of g; G(x0) = 0 exactly, signed left of x0.
GridFunction cumulative_integral(const GridFunction& g);
/// Same, anchored at node anchor_index instead of the grid's own anchor.
GridFunction cumulative_integral(const GridFunction& g, std::size_t anchor_index);

/// Order-4 first derivative (centred 5-point inside, one-sided 5-point at the ends).
GridFunction derivative(const GridFunction& g);
/// Order-4 second derivative (centred 5-point inside, one-sided 6-point at the ends).
GridFunction second_derivative(const GridFunction& g);

/// Degree-5 local Lagrange interpolation; returns the stored value on a node hit.
Complex interpolate(const GridFunction& g, double x);

/// Composite trapezoid weights of the grid (sum = b - a).
std::vector<double> trapezoid_weights(const Grid& grid);

/// Local interpolation stencil at x (start node and Lagrange weights).
Stencil<kInterpolationStencil> interpolation_stencil(const Grid& grid, double x);

}  // namespace sltaylor
