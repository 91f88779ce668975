#include "sltaylor/sturm.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "sltaylor/grid_io.hpp"

namespace sltaylor {

SlProblem::SlProblem(GridFunction q, BoundaryCondition left, BoundaryCondition right)
    : q_(std::move(q)), left_(left), right_(right) {
  auto degenerate = [](const BoundaryCondition& bc) {
    return bc.value == Complex{0.0, 0.0} && bc.slope == Complex{0.0, 0.0};
  };
  if (degenerate(left_)) throw ConfigError("left boundary condition has both coefficients zero");
  if (degenerate(right_)) throw ConfigError("right boundary condition has both coefficients zero");
}

SeedSolution build_seed_solution(const GridFunction& q, double threshold) {
  const Grid& grid = q.grid();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].imag() != 0.0) {
      throw ConfigError("seed construction needs a real potential; supply a seed for complex q");
    }
  }
  const std::size_t n = grid.size();
  // state (v1, v1', v2, v2')
  using State = std::array<double, 4>;
  auto rhs = [](const State& y, double qx) { return State{y[1], -qx * y[0], y[3], -qx * y[2]}; };
  auto axpy = [](const State& y, const State& k, double h) {
    return State{y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
  };

  std::vector<Complex> f(n);
  std::vector<Complex> fp(n);
  State y{1.0, 0.0, 0.0, 1.0};
  f[0] = {y[0], y[2]};
  fp[0] = {y[1], y[3]};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double x = grid.node(i);
    const double h = grid.node(i + 1) - x;
    const double q0 = q[i].real();
    const double qm = interpolate(q, x + 0.5 * h).real();
    const double q1 = q[i + 1].real();
    const State k1 = rhs(y, q0);
    const State k2 = rhs(axpy(y, k1, 0.5 * h), qm);
    const State k3 = rhs(axpy(y, k2, 0.5 * h), qm);
    const State k4 = rhs(axpy(y, k3, h), q1);
    for (std::size_t c = 0; c < 4; ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    f[i + 1] = {y[0], y[2]};
    fp[i + 1] = {y[1], y[3]};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(f[i]) > threshold)) {
      throw SeedError("seed magnitude below threshold; refine the grid", i, grid.node(i));
    }
  }
  return {GridFunction(q.grid_ptr(), std::move(f)), GridFunction(q.grid_ptr(), std::move(fp))};
}

RecursiveFamily build_problem_family(const SlProblem& problem, const FamilyOptions& options) {
  SeedSolution seed = build_seed_solution(problem.q(), options.seed_threshold);
  return RecursiveFamily::build(seed.f, 0, options, std::move(seed.f_prime));
}

namespace {

void require_compatible(const SlProblem& problem, const RecursiveFamily& family) {
  if (!problem.grid().same_nodes(family.grid())) throw DimensionError("problem and family live on different grids");
  if (family.anchor_index() != 0) throw ConfigError("eigenproblem families must be anchored at the left endpoint");
}

}  // namespace

Combination left_combination(const SlProblem& problem, const RecursiveFamily& family) {
  require_compatible(problem, family);
  const Complex fa = family.seed()[0];
  const Complex fpa = family.seed_derivative()[0];
  const Complex c1 = problem.left().value;
  const Complex c2 = problem.left().slope;
  const Combination beta{c2 / fa, -fa * c1 - c2 * fpa};
  if (beta.beta1 == Complex{0.0, 0.0} && beta.beta2 == Complex{0.0, 0.0}) {
    throw NumericalError("left boundary condition produced the trivial combination");
  }
  return beta;
}

Complex characteristic(const SlProblem& problem, const RecursiveFamily& family, Complex lambda,
                       std::size_t n_terms) {
  const Combination beta = left_combination(problem, family);
  const SppsSolution u1(family, lambda, n_terms, SolutionKind::u1);
  const SppsSolution u2(family, lambda, n_terms, SolutionKind::u2);
  const std::size_t last = family.grid().size() - 1;
  const Complex ub = beta.beta1 * u1.value_at_node(last) + beta.beta2 * u2.value_at_node(last);
  const Complex upb = beta.beta1 * u1.derivative_at_node(last) + beta.beta2 * u2.derivative_at_node(last);
  return problem.right().value * ub + problem.right().slope * upb;
}

GridFunction eigenfunction(const SlProblem& problem, const RecursiveFamily& family, Complex lambda,
                           std::size_t n_terms) {
  const Combination beta = left_combination(problem, family);
  const SppsSolution u1(family, lambda, n_terms, SolutionKind::u1);
  const SppsSolution u2(family, lambda, n_terms, SolutionKind::u2);
  return u1.values() * beta.beta1 + u2.values() * beta.beta2;
}

namespace {

std::string fmt(double v) { return format_double(v); }

}  // namespace

EigenResult find_eigenvalues(const SlProblem& problem, const RecursiveFamily& family, const EigenOptions& options) {
  require_compatible(problem, family);
  if (!std::isfinite(options.lambda_min) || !std::isfinite(options.lambda_max) ||
      !(options.lambda_min < options.lambda_max)) {
    throw ConfigError("eigenvalue range must be finite with lambda_min < lambda_max");
  }
  if (options.scan_points < 2) throw ConfigError("scan needs at least two points");
  if (!(options.tol > 0.0)) throw ConfigError("root tolerance must be positive");

  EigenResult result;
  bool cap_warned = false;
  auto evaluate = [&](double lambda) {
    const TruncationChoice t = choose_truncation(family, lambda, options.truncation_tol);
    if (t.cap_reached && !cap_warned) {
      cap_warned = true;
      result.warnings.push_back("truncation tolerance not met within the family order near lambda = " + fmt(lambda) +
                                "; raise the family order or the truncation tolerance");
    }
    return ScanSample{lambda, characteristic(problem, family, lambda, t.n_terms), t.n_terms};
  };

  const std::size_t P = options.scan_points;
  const double step = (options.lambda_max - options.lambda_min) / static_cast<double>(P - 1);
  result.scan.reserve(P);
  for (std::size_t i = 0; i < P; ++i) {
    const double lambda = i + 1 == P ? options.lambda_max : options.lambda_min + step * static_cast<double>(i);
    result.scan.push_back(evaluate(lambda));
  }

  std::size_t peak = 0;
  for (std::size_t i = 1; i < P; ++i) {
    if (std::abs(result.scan[i].phi) > std::abs(result.scan[peak].phi)) peak = i;
  }
  result.theta = std::arg(result.scan[peak].phi);
  const Complex rot = std::polar(1.0, -result.theta);
  auto g = [&](const ScanSample& s) { return (rot * s.phi).real(); };

  auto record = [&](double lambda, double scale) {
    const ScanSample s = evaluate(lambda);
    const double rel = scale > 0.0 ? std::abs(s.phi) / scale : std::abs(s.phi);
    if (rel > options.tol) {
      result.warnings.push_back("root near lambda = " + fmt(lambda) + " has relative characteristic residual " +
                                fmt(rel));
    }
    result.eigenvalues.emplace_back(lambda, 0.0);
    result.characteristic_residuals.push_back(rel);
    result.truncations.push_back(s.n_terms);
    result.eigenfunction_residuals.push_back(
        residual(lambda, eigenfunction(problem, family, lambda, s.n_terms), problem.q()));
  };

  for (std::size_t i = 0; i < P; ++i) {
    const double gi = g(result.scan[i]);
    if (gi == 0.0) {
      record(result.scan[i].lambda, std::abs(result.scan[peak].phi));
      continue;
    }
    if (i + 1 == P) break;
    const double gj = g(result.scan[i + 1]);
    if (gj == 0.0 || (gi > 0.0) == (gj > 0.0)) continue;
    auto fn = [&](double lambda) { return (rot * evaluate(lambda).phi).real(); };
    std::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(fn, result.scan[i].lambda, result.scan[i + 1].lambda, gi,
                                                           gj, boost::math::tools::eps_tolerance<double>(52), iters);
    const double root = 0.5 * (bracket.first + bracket.second);
    record(root, std::max(std::abs(result.scan[i].phi), std::abs(result.scan[i + 1].phi)));
  }

  for (std::size_t i = 1; i + 1 < P; ++i) {
    const double a = g(result.scan[i - 1]);
    const double b = g(result.scan[i]);
    const double c = g(result.scan[i + 1]);
    const bool same_sign = (a > 0.0) == (b > 0.0) && (b > 0.0) == (c > 0.0) && a != 0.0 && b != 0.0 && c != 0.0;
    if (same_sign && std::abs(b) < std::abs(a) && std::abs(b) < std::abs(c)) {
      std::ostringstream msg;
      msg << "possible unresolved pair of roots in [" << fmt(result.scan[i - 1].lambda) << ", "
          << fmt(result.scan[i + 1].lambda) << "]; increase scan_points";
      result.warnings.push_back(msg.str());
    }
  }
  return result;
}

}  // namespace sltaylor
