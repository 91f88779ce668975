#include "sltaylor/recint.hpp"

#include <string>

namespace sltaylor {

RecursiveFamily RecursiveFamily::build(const GridFunction& f, const FamilyOptions& options,
                                       std::optional<GridFunction> f_prime) {
  return build(f, f.grid().anchor_index(), options, std::move(f_prime));
}

RecursiveFamily RecursiveFamily::build(const GridFunction& f, std::size_t x0_index, const FamilyOptions& options,
                                       std::optional<GridFunction> f_prime) {
  const Grid& grid = f.grid();
  if (x0_index >= grid.size()) throw ConfigError("family anchor index outside the grid");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(std::abs(f[i]) > options.seed_threshold)) {
      throw SeedError("seed f vanishes (|f| = " + std::to_string(std::abs(f[i])) + ")", i, grid.node(i));
    }
  }
  if (f_prime && !f_prime->grid().same_nodes(grid)) {
    throw DimensionError("seed derivative lives on a different grid");
  }

  GridFunction phi = f * f;
  GridFunction inv_phi = phi.reciprocal();
  GridFunction fp = f_prime ? std::move(*f_prime) : derivative(f);

  RecursiveFamily fam(f, std::move(fp), phi, x0_index);
  const std::size_t N = options.order;
  fam.X_.reserve(N + 1);
  fam.Xt_.reserve(N + 1);
  fam.X_.push_back(GridFunction::constant(f.grid_ptr(), 1.0));
  fam.Xt_.push_back(GridFunction::constant(f.grid_ptr(), 1.0));

  for (std::size_t n = 1; n <= N; ++n) {
    const bool odd = (n % 2) == 1;
    // X(n) weight phi^{(-1)^n}: 1/phi for odd n; X~(n) the opposite.
    const GridFunction& wx = odd ? inv_phi : phi;
    const GridFunction& wxt = odd ? phi : inv_phi;
    const auto scale = static_cast<double>(n);
    fam.X_.push_back(scale * cumulative_integral(fam.X_.back() * wx, x0_index));
    fam.Xt_.push_back(scale * cumulative_integral(fam.Xt_.back() * wxt, x0_index));
  }
  for (std::size_t n = 0; n <= N; ++n) {
    fam.X_sup_.push_back(fam.X_[n].max_abs());
    fam.Xt_sup_.push_back(fam.Xt_[n].max_abs());
  }
  return fam;
}

void RecursiveFamily::check_order(std::size_t n) const {
  if (n > order()) {
    throw OrderError("order " + std::to_string(n) + " exceeds family order " + std::to_string(order()));
  }
}

const GridFunction& RecursiveFamily::X(std::size_t n) const {
  check_order(n);
  return X_[n];
}

const GridFunction& RecursiveFamily::Xt(std::size_t n) const {
  check_order(n);
  return Xt_[n];
}

double RecursiveFamily::X_sup(std::size_t n) const {
  check_order(n);
  return X_sup_[n];
}

double RecursiveFamily::Xt_sup(std::size_t n) const {
  check_order(n);
  return Xt_sup_[n];
}

const GridFunction& RecursiveFamily::psi(std::size_t k) const {
  check_order(k);
  return (k % 2 == 1) ? X_[k] : Xt_[k];
}

GridFunction RecursiveFamily::phi_k(std::size_t k) const { return seed_ * psi(k); }

}  // namespace sltaylor
