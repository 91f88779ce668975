#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sltaylor/seeds.hpp"
#include "sltaylor/spps.hpp"

using namespace sltaylor;

namespace {

struct Fixture {
  GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  SampledSeed seed = sample_seed(exp_seed(1.0), grid);
  RecursiveFamily fam = RecursiveFamily::build(seed.f, 0, {}, seed.f_prime);
};

const Fixture& exp_fixture() {
  static const Fixture f;
  return f;
}

const RecursiveFamily& flat_family() {
  static const RecursiveFamily fam = RecursiveFamily::build(GridFunction::constant(Grid::uniform(0.0, 1.0, 5001), 1.0), 0);
  return fam;
}

}  // namespace

TEST_CASE("u1 for zero spectral parameter is the seed") {
  const auto& fx = exp_fixture();
  for (double x : {0.0, 0.3, 0.71, 1.0}) CHECK(std::abs(eval_u1(fx.fam, 0.0, x, 5) - std::exp(x)) < 1e-12);
}

TEST_CASE("u1 matches the constant-potential closed form") {
  const auto& fx = exp_fixture();
  const Complex ref = oracle::constant_potential_u1(1.0, 2.0, 0.7);
  CHECK(std::abs(eval_u1(fx.fam, 2.0, 0.7, 25) - ref) / std::abs(ref) < 1e-8);
}

TEST_CASE("u2 for the free equation is a sine") {
  const RecursiveFamily& fam = flat_family();
  const double pi = std::numbers::pi;
  CHECK(std::abs(eval_u2(fam, 0.0, 0.4, 1) - 0.4) < 1e-14);
  double e = 0.0;
  double ep = 0.0;
  for (int j = 0; j <= 100; ++j) {
    const double x = j / 100.0;
    e = std::max(e, std::abs(eval_u2(fam, -pi * pi, x, 30) - std::sin(pi * x) / pi));
    ep = std::max(ep, std::abs(eval_u2_prime(fam, -pi * pi, x, 30) - std::cos(pi * x)));
  }
  CHECK(e < 1e-7);
  CHECK(ep < 1e-6);
}

TEST_CASE("initial values at the anchor for random spectral parameters") {
  const auto& fx = exp_fixture();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double f0 = 1.0;
  const double fp0 = 1.0;
  for (int t = 0; t < 100; ++t) {
    const Complex lambda = std::polar(50.0 * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    CHECK(std::abs(eval_u1(fx.fam, lambda, 0.0, 30) - f0) < 1e-9);
    CHECK(std::abs(eval_u1_prime(fx.fam, lambda, 0.0, 30) - fp0) < 1e-9);
    CHECK(std::abs(eval_u2(fx.fam, lambda, 0.0, 30)) < 1e-9);
    CHECK(std::abs(eval_u2_prime(fx.fam, lambda, 0.0, 30) - 1.0 / f0) < 1e-9);
  }
}

TEST_CASE("Wronskian is identically one") {
  const auto& fx = exp_fixture();
  for (Complex lambda : {Complex{0.0, 0.0}, Complex{-30.0, 0.0}, Complex{12.0, 25.0}}) {
    const SppsSolution u1(fx.fam, lambda, 30, SolutionKind::u1);
    const SppsSolution u2(fx.fam, lambda, 30, SolutionKind::u2);
    for (std::size_t i = 0; i < fx.grid->size(); i += 7) {
      const Complex w = u1.value_at_node(i) * u2.derivative_at_node(i) - u1.derivative_at_node(i) * u2.value_at_node(i);
      CHECK(std::abs(w - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("residual of truncated solutions") {
  const auto& fx = exp_fixture();
  CHECK(residual(0.0, fx.seed.f, fx.seed.q) < 1e-5);
  for (Complex lambda : {Complex{2.0, 0.0}, Complex{-100.0, 0.0}, Complex{0.0, 100.0}, Complex{60.0, -70.0}}) {
    const auto n = choose_truncation(fx.fam, lambda, 1e-14);
    CHECK_FALSE(n.cap_reached);
    CHECK(residual(lambda, SppsSolution(fx.fam, lambda, n.n_terms, SolutionKind::u1).values(), fx.seed.q) < 1e-5);
    CHECK(residual(lambda, SppsSolution(fx.fam, lambda, n.n_terms, SolutionKind::u2).values(), fx.seed.q) < 1e-5);
  }
  const double coarse = residual(-400.0, SppsSolution(fx.fam, -400.0, 2, SolutionKind::u1).values(), fx.seed.q);
  const double fine = residual(-400.0, SppsSolution(fx.fam, -400.0, 30, SolutionKind::u1).values(), fx.seed.q);
  CHECK(coarse > 100 * fine);
}

TEST_CASE("truncation choice") {
  const auto& fx = exp_fixture();
  CHECK(choose_truncation(fx.fam, 0.0, 1e-12).n_terms == 1);
  const double pi = std::numbers::pi;
  const TruncationChoice t = choose_truncation(flat_family(), -pi * pi, 1e-10);
  CHECK(t.n_terms <= 15);
  CHECK_FALSE(t.cap_reached);
  const TruncationChoice capped = choose_truncation(fx.fam, -50.0, 1e-30);
  CHECK(capped.cap_reached);
  CHECK(capped.n_terms == max_terms(fx.fam));
  CHECK_THROWS_AS(choose_truncation(fx.fam, 1.0, 0.0), ConfigError);
}

TEST_CASE("truncation must fit the family order") {
  FamilyOptions o;
  o.order = 9;
  const RecursiveFamily fam = RecursiveFamily::build(GridFunction::constant(Grid::uniform(0.0, 1.0, 101), 1.0), 0, o);
  CHECK_NOTHROW(eval_u2(fam, 1.0, 0.5, 5));
  CHECK_THROWS_AS(eval_u2(fam, 1.0, 0.5, 6), OrderError);
  CHECK_THROWS_AS(eval_u1(fam, 1.0, 0.5, 0), OrderError);
  CHECK_THROWS_AS(eval_u1(fam, 1.0, 1.5, 3), DomainError);
}

TEST_CASE("generalized derivatives of the quotient series") {
  const auto& fx = exp_fixture();
  const Complex lambda = 3.0;
  for (std::size_t j = 0; j <= 6; ++j) {
    const GridFunction g = quotient_gen_derivative(fx.fam, lambda, SolutionKind::u1, j, 20);
    const Complex expect = j % 2 == 0 ? std::pow(lambda, static_cast<double>(j / 2)) : 0.0;
    CHECK(std::abs(g.at_anchor() - expect) < 1e-12);
  }
}
