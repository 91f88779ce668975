#pragma once

/// Recursive-integral families built from a nonvanishing seed f.
///
///   X~(0) = X(0) = 1
///   X~(n) = n * int_{x0}^{x} X~(n-1) (f^2)^{(-1)^{n-1}} ds
///   X(n)  = n * int_{x0}^{x} X(n-1)  (f^2)^{(-1)^{n}}   ds
///
/// psi_k is X(k) for odd k and X~(k) for even k; phi_k = f * psi_k.

#include <cstddef>
#include <optional>
#include <vector>

#include "sltaylor/grid.hpp"

namespace sltaylor {

inline constexpr std::size_t kDefaultFamilyOrder = 60;
inline constexpr double kDefaultSeedThreshold = 1e-12;

struct FamilyOptions {
  std::size_t order = kDefaultFamilyOrder;
  /// |f| below this at any node is a seed degeneracy.
  double seed_threshold = kDefaultSeedThreshold;
};

class RecursiveFamily {
 public:
  /// Builds X(0..N) and X~(0..N) anchored at node x0_index.
  /// `f_prime`, when given, is used wherever f' is needed; otherwise it is
  /// obtained by grid differentiation of f.
  static RecursiveFamily build(const GridFunction& f, std::size_t x0_index, const FamilyOptions& options = {},
                               std::optional<GridFunction> f_prime = std::nullopt);
  /// Anchored at the grid's own anchor.
  static RecursiveFamily build(const GridFunction& f, const FamilyOptions& options = {},
                               std::optional<GridFunction> f_prime = std::nullopt);

  std::size_t order() const noexcept { return X_.size() - 1; }
  std::size_t anchor_index() const noexcept { return anchor_; }
  double x0() const { return seed_.grid().node(anchor_); }
  const Grid& grid() const noexcept { return seed_.grid(); }
  const GridPtr& grid_ptr() const noexcept { return seed_.grid_ptr(); }

  const GridFunction& seed() const noexcept { return seed_; }
  const GridFunction& seed_derivative() const noexcept { return seed_prime_; }
  /// phi = f^2
  const GridFunction& phi() const noexcept { return phi_; }

  const GridFunction& X(std::size_t n) const;
  const GridFunction& Xt(std::size_t n) const;
  /// sup-norm of X(n) / X~(n) over the grid (cached at build time).
  double X_sup(std::size_t n) const;
  double Xt_sup(std::size_t n) const;

  const GridFunction& psi(std::size_t k) const;
  GridFunction phi_k(std::size_t k) const;

 private:
  RecursiveFamily(GridFunction f, GridFunction f_prime, GridFunction phi, std::size_t anchor)
      : seed_(std::move(f)), seed_prime_(std::move(f_prime)), phi_(std::move(phi)), anchor_(anchor) {}

  void check_order(std::size_t n) const;

  GridFunction seed_;
  GridFunction seed_prime_;
  GridFunction phi_;
  std::size_t anchor_;
  std::vector<GridFunction> X_;
  std::vector<GridFunction> Xt_;
  std::vector<double> X_sup_;
  std::vector<double> Xt_sup_;
};

/// Free-function entry points.
inline RecursiveFamily build_family(const GridFunction& f, std::size_t x0_index,
                                    std::size_t order = kDefaultFamilyOrder) {
  FamilyOptions o;
  o.order = order;
  return RecursiveFamily::build(f, x0_index, o);
}
inline const GridFunction& psi(const RecursiveFamily& family, std::size_t k) { return family.psi(k); }
inline GridFunction phi_k(const RecursiveFamily& family, std::size_t k) { return family.phi_k(k); }

}  // namespace sltaylor
