#pragma once

/// Global Chebyshev least-squares fits of grid data, used to read off local
/// jets (value plus a handful of derivatives) of sampled functions.

#include <cstddef>
#include <vector>

#include "sltaylor/grid.hpp"
#include "sltaylor/jet.hpp"

namespace sltaylor {

struct ChebyshevFitOptions {
  std::size_t max_degree = 30;
  /// Series is cut where three consecutive coefficients fall below this times the largest one,
  /// or below the noise plateau of the tail when that is higher.
  double tail_tolerance = 1e-15;
};

class ChebyshevFit {
 public:
  explicit ChebyshevFit(const GridFunction& g, const ChebyshevFitOptions& options = {});

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// False when the coefficient tail never dropped below the tolerance.
  bool converged() const noexcept { return converged_; }
  /// Largest deviation from the data over all nodes.
  double max_residual() const noexcept { return max_residual_; }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  Complex operator()(double x) const;
  /// Jet of the fitted polynomial at x, any x in [a,b].
  Jet jet_at(double x, std::size_t order) const;

 private:
  double lo_;
  double hi_;
  std::vector<Complex> coeffs_;
  bool converged_ = false;
  double max_residual_ = 0.0;
};

struct ApproximateJet {
  Jet jet;
  /// Always set: derivatives come from fitted data, not exact expressions.
  bool reduced_accuracy = true;
  bool fit_converged = false;
};

/// Jet of sampled data at a node, obtained from a Chebyshev fit of the whole grid.
ApproximateJet jet_from_grid(const GridFunction& g, std::size_t node, std::size_t order,
                             const ChebyshevFitOptions& options = {});

}  // namespace sltaylor
