#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "sltaylor/sturm.hpp"

using namespace sltaylor;

namespace {

constexpr double pi = std::numbers::pi;

const GridPtr& unit_grid() {
  static const GridPtr g = Grid::uniform(0.0, 1.0, 5001);
  return g;
}

SlProblem dirichlet(double q_const) {
  return SlProblem(GridFunction::constant(unit_grid(), q_const), BoundaryCondition::dirichlet(),
                   BoundaryCondition::dirichlet());
}

}  // namespace

TEST_CASE("boundary conditions must be non-degenerate") {
  const GridFunction q = GridFunction::constant(unit_grid(), 0.0);
  CHECK_THROWS_AS(SlProblem(q, {0.0, 0.0}, BoundaryCondition::dirichlet()), ConfigError);
  CHECK_THROWS_AS(SlProblem(q, BoundaryCondition::neumann(), {0.0, 0.0}), ConfigError);
}

TEST_CASE("seed from the potential") {
  SUBCASE("zero potential") {
    const GridFunction f = build_seed(GridFunction::constant(unit_grid(), 0.0));
    for (std::size_t i = 0; i < f.size(); i += 50) {
      CHECK(std::abs(f[i] - Complex{1.0, unit_grid()->node(i)}) < 1e-12);
      CHECK(std::abs(f[i]) >= 1.0);
    }
  }
  SUBCASE("negative constant potential") {
    const SeedSolution s = build_seed_solution(GridFunction::constant(unit_grid(), -1.0));
    for (std::size_t i = 0; i < s.f.size(); i += 50) {
      const double x = unit_grid()->node(i);
      CHECK(std::abs(s.f[i] - Complex{std::cosh(x), std::sinh(x)}) < 1e-12);
    }
    const GridFunction res = derivative(s.f_prime) - s.f;
    CHECK(res.max_abs() < 1e-8);
  }
  SUBCASE("Wronskian of the real pair") {
    const GridFunction q = sample([](double x) { return 20.0 * std::sin(5 * x) - 30.0 * x; }, unit_grid());
    const SeedSolution s = build_seed_solution(q);
    for (std::size_t i = 0; i < s.f.size(); ++i) {
      const double w = s.f[i].real() * s.f_prime[i].imag() - s.f_prime[i].real() * s.f[i].imag();
      CHECK(std::abs(w - 1.0) < 1e-6);
    }
  }
  SUBCASE("complex potential is rejected") {
    CHECK_THROWS_AS(build_seed(GridFunction::constant(unit_grid(), {1.0, 1.0})), ConfigError);
  }
}

TEST_CASE("characteristic function") {
  const SlProblem p = dirichlet(0.0);
  const RecursiveFamily fam = build_problem_family(p);
  CHECK(std::abs(characteristic(p, fam, -pi * pi, 30)) < 1e-7);
  CHECK(std::abs(characteristic(p, fam, -pi * pi / 2, 30)) > 0.1);
  // u(a) = 0, u'(a) = -1, so u = -(x - a) at lambda = 0
  CHECK(std::abs(characteristic(p, fam, 0.0, 30) + 1.0) < 1e-12);

  const RecursiveFamily mid = RecursiveFamily::build(fam.seed(), 2500);
  CHECK_THROWS_AS(characteristic(p, mid, 1.0, 10), ConfigError);
}

TEST_CASE("characteristic function is a polynomial at fixed truncation") {
  const SlProblem p = dirichlet(-1.0);
  const RecursiveFamily fam = build_problem_family(p);
  const std::size_t n = 8;
  // degree <= n in lambda: Lagrange interpolation through n + 1 nodes
  std::vector<double> nodes;
  for (std::size_t j = 0; j <= n; ++j) nodes.push_back(-20.0 + 40.0 * static_cast<double>(j) / n);
  std::vector<Complex> vals;
  for (double l : nodes) vals.push_back(characteristic(p, fam, l, n));
  for (double probe : {-13.3, 2.7, 17.1}) {
    Complex interp = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      double w = 1.0;
      for (std::size_t k = 0; k <= n; ++k) {
        if (k != j) w *= (probe - nodes[k]) / (nodes[j] - nodes[k]);
      }
      interp += w * vals[j];
    }
    const Complex direct = characteristic(p, fam, probe, n);
    CHECK(std::abs(interp - direct) < 1e-8 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("eigenvalues") {
  SUBCASE("Dirichlet, zero potential") {
    const SlProblem p = dirichlet(0.0);
    const RecursiveFamily fam = build_problem_family(p);
    EigenOptions o;
    o.lambda_min = -120.0;
    o.lambda_max = -1.0;
    const EigenResult r = find_eigenvalues(p, fam, o);
    REQUIRE(r.eigenvalues.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const double ref = oracle::dirichlet_eigenvalue(0.0, static_cast<int>(3 - i));
      CHECK(std::abs(r.eigenvalues[i].real() - ref) / std::abs(ref) < 1e-6);
      CHECK(r.eigenfunction_residuals[i] < 1e-4);
      CHECK(r.characteristic_residuals[i] < o.tol);
    }
    CHECK(r.scan.size() == o.scan_points);
    CHECK(r.warnings.empty());
  }
  SUBCASE("Dirichlet, shifted potential") {
    const SlProblem p = dirichlet(-1.0);
    const RecursiveFamily fam = build_problem_family(p);
    EigenOptions o;
    o.lambda_min = -120.0;
    o.lambda_max = -1.0;
    const EigenResult r = find_eigenvalues(p, fam, o);
    REQUIRE(r.eigenvalues.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const double ref = oracle::dirichlet_eigenvalue(1.0, static_cast<int>(3 - i));
      CHECK(std::abs(r.eigenvalues[i].real() - ref) / std::abs(ref) < 1e-6);
    }
  }
  SUBCASE("Neumann, zero potential") {
    const SlProblem p(GridFunction::constant(unit_grid(), 0.0), BoundaryCondition::neumann(),
                      BoundaryCondition::neumann());
    const RecursiveFamily fam = build_problem_family(p);
    EigenOptions o;
    o.lambda_min = -50.0;
    o.lambda_max = 1.0;
    const EigenResult r = find_eigenvalues(p, fam, o);
    REQUIRE(r.eigenvalues.size() == 3);
    CHECK(std::abs(r.eigenvalues[0].real() + 4 * pi * pi) < 1e-6 * 4 * pi * pi);
    CHECK(std::abs(r.eigenvalues[1].real() + pi * pi) < 1e-6 * pi * pi);
    CHECK(std::abs(r.eigenvalues[2].real()) < 1e-8);
  }
  SUBCASE("eigenvalue count") {
    const SlProblem p = dirichlet(0.0);
    const RecursiveFamily fam = build_problem_family(p);
    for (int K = 1; K <= 5; ++K) {
      EigenOptions o;
      o.lambda_min = -(K + 0.5) * (K + 0.5) * pi * pi;
      o.lambda_max = 0.0;
      o.scan_points = 50 * static_cast<std::size_t>(K);
      CHECK(find_eigenvalues(p, fam, o).eigenvalues.size() == static_cast<std::size_t>(K));
    }
  }
  SUBCASE("no roots is an empty result") {
    const SlProblem p = dirichlet(0.0);
    const RecursiveFamily fam = build_problem_family(p);
    EigenOptions o;
    o.lambda_min = 0.0;
    o.lambda_max = 50.0;
    CHECK(find_eigenvalues(p, fam, o).eigenvalues.empty());
  }
  SUBCASE("coarse scan warns about a hidden pair") {
    const SlProblem p = dirichlet(0.0);
    const RecursiveFamily fam = build_problem_family(p);
    EigenOptions o;
    o.lambda_min = -75.0;
    o.lambda_max = -5.0;
    o.scan_points = 3;
    const EigenResult r = find_eigenvalues(p, fam, o);
    CHECK(r.eigenvalues.empty());
    CHECK_FALSE(r.warnings.empty());
  }
  SUBCASE("bad ranges") {
    const SlProblem p = dirichlet(0.0);
    const RecursiveFamily fam = build_problem_family(p);
    EigenOptions o;
    o.lambda_min = 1.0;
    o.lambda_max = 0.0;
    CHECK_THROWS_AS(find_eigenvalues(p, fam, o), ConfigError);
  }
}
