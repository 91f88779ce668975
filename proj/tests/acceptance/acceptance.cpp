// Acceptance checks 1-8. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sltaylor/gentaylor.hpp"
#include "sltaylor/grid.hpp"
#include "sltaylor/recint.hpp"
#include "sltaylor/seeds.hpp"
#include "sltaylor/spps.hpp"
#include "sltaylor/sturm.hpp"
#include "sltaylor/transform.hpp"

using namespace sltaylor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double max_entry_error(const TransformMatrix& A, const oracle::Matrix& ref) {
  double worst = 0.0;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    for (std::size_t m = 0; m < ref.size(); ++m) worst = std::max(worst, std::abs(A(k, m) - ref[k][m]));
  }
  return worst;
}

Outcome golden_exp_matrix() {
  const StockSeed seed = exp_seed(1.0);
  const TransformMatrix A = build_A_recursive(seed.phi_jet(0.0, 4), 5);
  const double err = max_entry_error(A, oracle::exp_seed_A5(1.0));
  return {err < 1e-12, "max |A5 - reference| = " + sci(err)};
}

Outcome golden_axexp_matrix() {
  const StockSeed seed = inverse_exp_seed(1.0);
  const TransformMatrix A = build_A_recursive(seed.phi_jet(1.0, 3), 4);
  const double err = max_entry_error(A, oracle::axexp_seed_A4_reference(1.0));
  return {err < 1e-12, "max |A4 - reference| = " + sci(err)};
}

Outcome derivative_vector() {
  const double c = 1.0;
  const StockSeed seed = exp_seed(c);
  const SolutionTaylorVectors v = solution_taylor_vectors(build_A_recursive(seed.phi_jet(0.0, 4), 5));
  const auto ref = oracle::constant_potential_u1_taylor(c);
  double worst = 0.0;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const std::size_t len = std::max(ref[k].size(), v.u1[k].coeffs().size());
    for (std::size_t p = 0; p < len; ++p) {
      const double r = p < ref[k].size() ? ref[k][p] : 0.0;
      worst = std::max(worst, std::abs(v.u1[k].coeff(p) - r));
    }
  }
  return {worst < 1e-12, "max coefficient error = " + sci(worst)};
}

Outcome closed_form_solution() {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  const SampledSeed s = sample_seed(exp_seed(1.0), grid);
  const RecursiveFamily fam = RecursiveFamily::build(s.f, 0, {}, s.f_prime);
  double worst = 0.0;
  for (double lambda : {0.5, 2.0, 10.0}) {
    const SppsSolution u1(fam, lambda, 30, SolutionKind::u1);
    for (int j = 0; j < 20; ++j) {
      const double x = (j + 0.5) / 20.0;
      const Complex ref = oracle::constant_potential_u1(1.0, lambda, x);
      worst = std::max(worst, std::abs(u1.value(x) - ref) / std::abs(ref));
    }
  }
  return {worst < 1e-7, "max relative error = " + sci(worst)};
}

Outcome dirichlet_eigenvalues() {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  double worst = 0.0;
  std::size_t count_ok = 0;
  for (double c : {0.0, 1.0}) {
    const GridFunction q = GridFunction::constant(grid, -c * c);
    const SlProblem problem(q, BoundaryCondition::dirichlet(), BoundaryCondition::dirichlet());
    const RecursiveFamily fam = build_problem_family(problem);
    EigenOptions opt;
    opt.lambda_min = -120.0;
    opt.lambda_max = -1.0;
    const EigenResult r = find_eigenvalues(problem, fam, opt);
    if (r.eigenvalues.size() == 3) ++count_ok;
    // ascending order puts n = 3 first
    for (std::size_t i = 0; i < std::min<std::size_t>(3, r.eigenvalues.size()); ++i) {
      const double ref = oracle::dirichlet_eigenvalue(c, static_cast<int>(3 - i));
      worst = std::max(worst, std::abs(r.eigenvalues[i] - ref) / std::abs(ref));
    }
  }
  return {count_ok == 2 && worst < 1e-6, "max relative error = " + sci(worst) + ", problems with 3 roots: " +
                                             std::to_string(count_ok) + "/2"};
}

Outcome builder_equivalence() {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Jet phi(0.3, oracle::random_jet_coeffs(rng, 8));
    const TransformMatrix R = build_A_recursive(phi, 8);
    const TransformMatrix C = build_A_closed_form(phi, 8);
    for (std::size_t k = 0; k <= 8; ++k) {
      for (std::size_t m = 0; m <= 8; ++m) worst = std::max(worst, std::abs(R(k, m) - C(k, m)));
    }
  }
  return {worst < 1e-9, "max entrywise discrepancy = " + sci(worst)};
}

Outcome basis_duality() {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  const SampledSeed s = sample_seed(exp_seed(1.0), grid);
  double worst = 0.0;
  for (std::size_t anchor : {std::size_t{0}, std::size_t{2500}}) {
    FamilyOptions fo;
    fo.order = 8;
    const RecursiveFamily fam = RecursiveFamily::build(s.f, anchor, fo, s.f_prime);
    for (std::size_t m = 0; m <= 6; ++m) {
      const GenDerivativeSequence g = gamma_seq(fam.psi(m), fam, m);
      const double scale = std::tgamma(static_cast<double>(m) + 1.0);
      for (std::size_t k = 0; k <= m; ++k) {
        const double ref = k == m ? scale : 0.0;
        worst = std::max(worst, std::abs(g.values[k] - ref) / scale);
      }
    }
  }
  return {worst < 1e-4, "max scaled error = " + sci(worst)};
}

Outcome remainder_inequality() {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  std::vector<double> points;
  for (int j = 1; j <= 20; ++j) points.push_back(j / 20.0);

  const RecursiveFamily flat = RecursiveFamily::build(GridFunction::constant(grid, 1.0), 0);
  const GridFunction ex = sample([](double x) { return std::exp(x); }, grid);
  const RemainderReport r1 = remainder_check(ex, flat, 3, points);

  const SampledSeed s = sample_seed(exp_seed(1.0), grid);
  const RecursiveFamily fam = RecursiveFamily::build(s.f, 0, {}, s.f_prime);
  const SppsSolution u1(fam, 3.0, 30, SolutionKind::u1);
  const GridFunction h = u1.values() / fam.seed();
  const RemainderReport r2 = remainder_check(h, fam, 3, points);
  const RemainderReport r3 = remainder_check(ex, fam, 3, points);

  const bool ok = r1.passed && r2.passed && r3.passed;
  return {ok, "violations: e^x flat " + std::to_string(r1.violations.size()) + ", u1/f " +
                  std::to_string(r2.violations.size()) + ", e^x exp-seed " + std::to_string(r3.violations.size())};
}

Outcome wronskian() {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  const SampledSeed s = sample_seed(exp_seed(1.0), grid);
  const RecursiveFamily fam = RecursiveFamily::build(s.f, 0, {}, s.f_prime);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Complex lambda = std::polar(50.0 * std::sqrt(r(rng)), 2 * std::numbers::pi * r(rng));
    const std::size_t n = choose_truncation(fam, lambda, 1e-15).n_terms;
    const SppsSolution u1(fam, lambda, n, SolutionKind::u1);
    const SppsSolution u2(fam, lambda, n, SolutionKind::u2);
    for (std::size_t i = 0; i < grid->size(); i += 10) {
      const Complex w = u1.value_at_node(i) * u2.derivative_at_node(i) - u1.derivative_at_node(i) * u2.value_at_node(i);
      worst = std::max(worst, std::abs(w - 1.0));
    }
  }
  return {worst < 1e-6, "max |W - 1| = " + sci(worst)};
}

Outcome completeness() {
  // decay on (0,1)
  const GridPtr g01 = Grid::uniform(0.0, 1.0, 5001);
  const RecursiveFamily f01 = RecursiveFamily::build(GridFunction::constant(g01, 1.0), 0);
  const GridFunction x01 = GridFunction::identity(g01);
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t N = 1; N <= 8; ++N) {
    const double e = least_squares_project(x01, f01, N, BasisSelection::even).l2_error;
    if (e > prev * (1.0 + 1e-12)) monotone = false;
    prev = e;
  }
  // stall on (-1,1)
  const GridPtr g11 = Grid::uniform(-1.0, 1.0, 5001, 0.0);
  const RecursiveFamily f11 = RecursiveFamily::build(GridFunction::constant(g11, 1.0), FamilyOptions{});
  const GridFunction x11 = GridFunction::identity(g11);
  const double norm = std::sqrt(2.0 / 3.0);
  double stall_min = std::numeric_limits<double>::infinity();
  for (std::size_t N = 1; N <= 8; ++N) {
    stall_min = std::min(stall_min, least_squares_project(x11, f11, N, BasisSelection::even).l2_error);
  }
  const double union_err = least_squares_project(x11, f11, 4, BasisSelection::full).l2_error;
  const bool ok = monotone && stall_min > 0.99 * norm && union_err < 1e-6;
  return {ok, std::string("monotone ") + (monotone ? "yes" : "no") + ", even-only floor " + sci(stall_min) +
                  ", union " + sci(union_err)};
}

Outcome quadrature_order() {
  std::vector<double> errs;
  for (std::size_t n : {11, 21, 41, 81}) {
    const GridPtr grid = Grid::uniform(0.0, 1.0, n);
    const GridFunction g = sample([](double s) { return std::exp(-2 * s); }, grid);
    const GridFunction G = cumulative_integral(g);
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid->node(i);
      e = std::max(e, std::abs(G[i] - (1 - std::exp(-2 * x)) / 2));
    }
    errs.push_back(e);
  }
  double min_order = 1e9;
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) min_order = std::min(min_order, std::log2(errs[i] / errs[i + 1]));
  return {min_order >= 4.0, "observed order >= " + sci(min_order)};
}

template <typename Fn>
Outcome timed(Fn fn, double limit_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, " [%.2f s, limit %.0f s]", dt, limit_seconds);
  o.detail += buf;
  if (dt > limit_seconds) o.pass = false;
  return o;
}

int report(const std::string& id, const Outcome& o) {
  std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", id.c_str(), o.detail.c_str());
  return o.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += report("1 (A5, exp seed)", timed(golden_exp_matrix, 1));
  failures += report("2 (A4, a x exp(a/x) seed)", timed(golden_axexp_matrix, 1));
  failures += report("3 (u1/f derivative vector)", timed(derivative_vector, 1));
  failures += report("4 (u1 against closed form)", timed(closed_form_solution, 5));
  failures += report("5 (Dirichlet eigenvalues)", timed(dirichlet_eigenvalues, 30));
  failures += report("6 (matrix builders agree)", timed(builder_equivalence, 10));

  const Outcome a = timed(basis_duality, 60);
  const Outcome b = timed(remainder_inequality, 60);
  const Outcome c = timed(wronskian, 60);
  const Outcome d = timed(completeness, 60);
  const Outcome e = timed(quadrature_order, 60);
  std::printf("  7a basis duality: %s %s\n", a.pass ? "ok" : "bad", a.detail.c_str());
  std::printf("  7b remainder bound: %s %s\n", b.pass ? "ok" : "bad", b.detail.c_str());
  std::printf("  7c Wronskian: %s %s\n", c.pass ? "ok" : "bad", c.detail.c_str());
  std::printf("  7d least squares: %s %s\n", d.pass ? "ok" : "bad", d.detail.c_str());
  std::printf("  7e quadrature: %s %s\n", e.pass ? "ok" : "bad", e.detail.c_str());
  const bool all7 = a.pass && b.pass && c.pass && d.pass && e.pass;
  failures += report("7 (property suite)", {all7, all7 ? "7a-7e hold" : "see 7a-7e above"});
  failures += report("8 (completeness, empirical substitute)",
                     {d.pass, "covered by the decay and stall checks of 7d"});
  return failures;
}
