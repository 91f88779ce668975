#include "sltaylor/seeds.hpp"

#include <cmath>

namespace sltaylor {

StockSeed constant_seed(Complex k) {
  StockSeed s;
  s.name = "constant";
  s.f = [k](double) { return k; };
  s.f_prime = [](double) { return Complex{0.0, 0.0}; };
  s.q = [](double) { return Complex{0.0, 0.0}; };
  s.f_jet = [k](double x0, std::size_t order) { return Jet::constant(x0, k, order); };
  return s;
}

StockSeed exp_seed(double c) {
  StockSeed s;
  s.name = "exp";
  s.f = [c](double x) { return Complex{std::exp(c * x), 0.0}; };
  s.f_prime = [c](double x) { return Complex{c * std::exp(c * x), 0.0}; };
  s.q = [c](double) { return Complex{-c * c, 0.0}; };
  s.f_jet = [c](double x0, std::size_t order) { return jet_exp(Jet::variable(x0, order) * Complex{c, 0.0}); };
  return s;
}

StockSeed inverse_exp_seed(double a) {
  StockSeed s;
  s.name = "axexp";
  s.f = [a](double x) { return Complex{a * x * std::exp(a / x), 0.0}; };
  s.f_prime = [a](double x) { return Complex{a * std::exp(a / x) * (1.0 - a / x), 0.0}; };
  s.q = [a](double x) { return Complex{-a * a / (x * x * x * x), 0.0}; };
  s.f_jet = [a](double x0, std::size_t order) {
    if (x0 == 0.0) throw DomainError("a x exp(a/x) is singular at x = 0");
    const Jet x = Jet::variable(x0, order);
    return x * jet_exp(jet_reciprocal(x) * Complex{a, 0.0}) * Complex{a, 0.0};
  };
  return s;
}

SampledSeed sample_seed(const StockSeed& seed, const GridPtr& grid) {
  return {sample(seed.f, grid), sample(seed.f_prime, grid), sample(seed.q, grid)};
}

}  // namespace sltaylor
