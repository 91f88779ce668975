#pragma once

/// Closed-form seed solutions f of f'' + q f = 0 with their exact jets.

#include <cstddef>
#include <functional>
#include <string>

#include "sltaylor/grid.hpp"
#include "sltaylor/jet.hpp"

namespace sltaylor {

struct StockSeed {
  std::string name;
  std::function<Complex(double)> f;
  std::function<Complex(double)> f_prime;
  /// Potential q = -f''/f.
  std::function<Complex(double)> q;
  /// Exact jet of f at a point of its domain.
  std::function<Jet(double x0, std::size_t order)> f_jet;

  /// Jet of phi = f^2.
  Jet phi_jet(double x0, std::size_t order) const {
    const Jet j = f_jet(x0, order);
    return j * j;
  }
};

/// f = k, q = 0.
StockSeed constant_seed(Complex k);
/// f = exp(c x), q = -c^2.
StockSeed exp_seed(double c);
/// f = a x exp(a/x), q = -a^2 x^{-4}; defined for x != 0.
StockSeed inverse_exp_seed(double a);

struct SampledSeed {
  GridFunction f;
  GridFunction f_prime;
  GridFunction q;
};

SampledSeed sample_seed(const StockSeed& seed, const GridPtr& grid);

}  // namespace sltaylor
