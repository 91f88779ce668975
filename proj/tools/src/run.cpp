#include "sltaylor_cli/run.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <sltaylor/errors.hpp>
#include <sltaylor/gentaylor.hpp>
#include <sltaylor/grid_io.hpp>
#include <sltaylor/recint.hpp>
#include <sltaylor/seeds.hpp>
#include <sltaylor/spps.hpp>
#include <sltaylor/sturm.hpp>
#include <sltaylor/transform.hpp>
#include <sltaylor/version.hpp>

#include "json.hpp"

namespace sltaylor::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson complex_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson complex_list_json(std::span<const Complex> zs) {
  ojson out = ojson::array();
  for (const Complex& z : zs) out.push_back(complex_json(z));
  return out;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string csv_number(double v) { return format_double(v); }

/// Context shared by the command implementations.
class Session {
 public:
  Session(const RunConfig& config, std::ostream* log) : config_(config), log_(log) {}

  RunResult& result() { return result_; }

  void note(const std::string& line) const {
    if (log_) *log_ << "[sltaylor] " << line << '\n';
  }
  void warn(std::string w) {
    note("warning: " + w);
    result_.warnings.push_back(std::move(w));
  }
  void emit(std::string name, std::string content) {
    note("produced " + name);
    result_.files.push_back({std::move(name), std::move(content)});
  }

  GridPtr grid() {
    if (!grid_) {
      const GridSpec& g = *config_.grid;
      grid_ = Grid::uniform(g.a, g.b, g.n_nodes, g.anchor());
      note("grid [" + csv_number(g.a) + ", " + csv_number(g.b) + "] with " + std::to_string(g.n_nodes) +
           " nodes, anchor " + csv_number(grid_->x0()));
    }
    return grid_;
  }

  GridFunction potential() {
    const PotentialSpec& q = *config_.q;
    if (q.kind == PotentialSpec::Kind::csv) return read_grid_csv(q.path);
    const std::vector<Complex>& c = q.coefficients;
    return sample(
        [&c](double x) {
          Complex acc{0.0, 0.0};
          for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
          return acc;
        },
        grid());
  }

  std::optional<StockSeed> stock_seed() const {
    const SeedSpec& s = *config_.seed;
    if (s.kind != SeedSpec::Kind::builtin) return std::nullopt;
    if (s.name == "constant") return constant_seed(s.value);
    if (s.name == "exp") return exp_seed(s.c);
    return inverse_exp_seed(s.a);
  }

  /// f, f' and (when known) q on the grid.
  SampledSeed seed() {
    const SeedSpec& s = *config_.seed;
    switch (s.kind) {
      case SeedSpec::Kind::builtin: {
        note("builtin seed " + s.name);
        return sample_seed(*stock_seed(), grid());
      }
      case SeedSpec::Kind::from_q: {
        note("seed integrated from q");
        GridFunction q = potential();
        SeedSolution sol = build_seed_solution(q, config_.family.seed_threshold);
        return {std::move(sol.f), std::move(sol.f_prime), std::move(q)};
      }
      case SeedSpec::Kind::csv: {
        note("seed read from " + s.path.string());
        GridFunction f = read_grid_csv(s.path);
        GridFunction fp = s.derivative_path ? read_grid_csv(*s.derivative_path) : derivative(f);
        if (!s.derivative_path) warn("seed derivative obtained by grid differentiation");
        GridFunction q = config_.q ? potential() : GridFunction::constant(grid(), Complex{0.0, 0.0});
        if (!config_.q) has_q_ = false;
        return {std::move(f), std::move(fp), std::move(q)};
      }
    }
    throw Error("unknown seed kind");
  }

  bool has_q() const { return has_q_; }

  RecursiveFamily family(const SampledSeed& s) {
    note("building family of order " + std::to_string(config_.family.order));
    return RecursiveFamily::build(s.f, config_.family, s.f_prime);
  }

  GridFunction read_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    return read_csv(in, grid());
  }

 private:
  const RunConfig& config_;
  std::ostream* log_;
  RunResult result_;
  GridPtr grid_;
  bool has_q_ = true;
};

ojson grid_json(const GridSpec& g, double x0) {
  ojson j;
  j["a"] = g.a;
  j["b"] = g.b;
  j["n_nodes"] = g.n_nodes;
  j["x0"] = x0;
  return j;
}

void run_basis(const RunConfig& c, Session& s) {
  const SampledSeed seed = s.seed();
  const RecursiveFamily family = s.family(seed);
  ojson files = ojson::array();
  ojson orders = ojson::array();
  for (std::size_t k = 0; k <= c.basis->max_order; ++k) {
    std::ostringstream out;
    write_csv(out, family.psi(k));
    const std::string name = "psi_" + std::to_string(k) + ".csv";
    s.emit(name, out.str());
    orders.push_back(k);
    files.push_back(name);
  }
  ojson j;
  j["command"] = "basis";
  j["function"] = "psi";
  j["orders"] = orders;
  j["x0"] = family.x0();
  j["grid"] = grid_json(*c.grid, family.x0());
  j["files"] = files;
  s.emit("basis.json", dump(j));
}

void run_solve(const RunConfig& c, Session& s) {
  const SolveSpec& spec = *c.solve;
  const SampledSeed seed = s.seed();
  const RecursiveFamily family = s.family(seed);

  TruncationChoice trunc;
  if (spec.n_terms) {
    trunc.n_terms = *spec.n_terms;
  } else {
    trunc = choose_truncation(family, spec.lambda, spec.truncation_tol);
    s.note("truncation chosen: " + std::to_string(trunc.n_terms) + " terms");
    if (trunc.cap_reached) {
      const std::string msg = "truncation tolerance not verified within the family order (cap " +
                              std::to_string(trunc.n_terms) + " terms)";
      if (spec.fail_on_cap) throw NumericalError(msg);
      s.warn(msg);
    }
  }

  const SppsSolution u1(family, spec.lambda, trunc.n_terms, SolutionKind::u1);
  const SppsSolution u2(family, spec.lambda, trunc.n_terms, SolutionKind::u2);
  const GridFunction v1 = u1.values();
  const GridFunction d1 = u1.derivatives();
  const GridFunction v2 = u2.values();
  const GridFunction d2 = u2.derivatives();

  std::ostringstream out;
  out << "x,u1_re,u1_im,u1_prime_re,u1_prime_im,u2_re,u2_im,u2_prime_re,u2_prime_im\n";
  const auto x = family.grid().nodes();
  double wronskian_error = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << csv_number(x[i]);
    for (const Complex z : {v1[i], d1[i], v2[i], d2[i]}) out << ',' << csv_number(z.real()) << ',' << csv_number(z.imag());
    out << '\n';
    wronskian_error = std::max(wronskian_error, std::abs(v1[i] * d2[i] - d1[i] * v2[i] - 1.0));
  }
  s.emit("solution.csv", out.str());

  ojson j;
  j["command"] = "solve";
  j["lambda"] = complex_json(spec.lambda);
  j["n_terms"] = trunc.n_terms;
  j["cap_reached"] = trunc.cap_reached;
  j["x0"] = family.x0();
  j["wronskian_max_error"] = wronskian_error;
  if (s.has_q()) {
    j["residual_u1"] = residual(spec.lambda, v1, seed.q);
    j["residual_u2"] = residual(spec.lambda, v2, seed.q);
  } else {
    j["residual_u1"] = nullptr;
    j["residual_u2"] = nullptr;
  }
  s.emit("solve.json", dump(j));
}

void run_eigs(const RunConfig& c, Session& s) {
  const EigsSpec& spec = *c.eigs;
  const SlProblem problem(s.potential(), spec.left, spec.right);
  const RecursiveFamily family = build_problem_family(problem, c.family);
  s.note("scanning [" + csv_number(spec.options.lambda_min) + ", " + csv_number(spec.options.lambda_max) + "]");
  const EigenResult r = find_eigenvalues(problem, family, spec.options);
  for (const std::string& w : r.warnings) s.warn(w);

  ojson j;
  j["command"] = "eigs";
  j["range"] = {{"lambda_min", spec.options.lambda_min}, {"lambda_max", spec.options.lambda_max}};
  j["eigenvalues"] = complex_list_json(r.eigenvalues);
  j["characteristic_residuals"] = r.characteristic_residuals;
  j["eigenfunction_residuals"] = r.eigenfunction_residuals;
  j["truncations"] = r.truncations;
  j["theta"] = r.theta;
  s.emit("eigenvalues.json", dump(j));

  if (spec.write_scan) {
    std::ostringstream out;
    out << "lambda,phi_re,phi_im,n_terms\n";
    for (const ScanSample& p : r.scan) {
      out << csv_number(p.lambda) << ',' << csv_number(p.phi.real()) << ',' << csv_number(p.phi.imag()) << ','
          << p.n_terms << '\n';
    }
    s.emit("characteristic_scan.csv", out.str());
  }
}

void run_taylor(const RunConfig& c, Session& s) {
  const std::size_t n = c.taylor->n;
  const double x0 = c.taylor->x0 ? *c.taylor->x0 : c.grid->anchor();
  const std::size_t phi_order = n > 0 ? n - 1 : 0;

  std::optional<Jet> phi_jet;
  if (const auto stock = s.stock_seed()) {
    phi_jet = stock->phi_jet(x0, phi_order);
  } else {
    const SampledSeed seed = s.seed();
    const GridPtr g = s.grid();
    const auto node = g->find_node(x0, 1e-9 * (g->b() - g->a()) / static_cast<double>(g->size() - 1));
    if (!node) throw ValidationError("taylor.x0: must coincide with a grid node for sampled seeds");
    const ApproximateJet fit = jet_from_grid(seed.f * seed.f, *node, phi_order);
    phi_jet = fit.jet;
    s.warn("phi jet obtained from a Chebyshev fit of sampled data; reduced accuracy");
    if (!fit.fit_converged) s.warn("Chebyshev fit of phi did not reach its tail tolerance");
  }

  const TransformMatrix A = build_A_recursive(*phi_jet, n);
  std::ostringstream out;
  out << 'k';
  for (std::size_t m = 0; m <= n; ++m) out << ",re_" << m << ",im_" << m;
  out << '\n';
  for (std::size_t k = 0; k <= n; ++k) {
    out << k;
    for (std::size_t m = 0; m <= n; ++m) out << ',' << csv_number(A(k, m).real()) << ',' << csv_number(A(k, m).imag());
    out << '\n';
  }
  s.emit("A.csv", out.str());

  const SolutionTaylorVectors v = solution_taylor_vectors(A);
  auto polys = [](const std::vector<LambdaPoly>& ps) {
    ojson arr = ojson::array();
    for (const LambdaPoly& p : ps) arr.push_back(complex_list_json(p.coeffs()));
    return arr;
  };
  ojson j;
  j["command"] = "taylor";
  j["x0"] = x0;
  j["n"] = n;
  j["coefficient_order"] = "ascending powers of lambda";
  j["u1_over_f"] = polys(v.u1);
  j["u2_over_f"] = polys(v.u2);
  s.emit("taylor.json", dump(j));
}

GridFunction builtin_target(const std::string& name, const GridPtr& grid) {
  return sample(
      [&name](double x) -> Complex {
        if (name == "one") return 1.0;
        if (name == "identity") return x;
        if (name == "exp") return std::exp(x);
        if (name == "sin") return std::sin(x);
        if (name == "cos") return std::cos(x);
        return std::abs(x);
      },
      grid);
}

std::string basis_name(BasisSelection b) {
  switch (b) {
    case BasisSelection::even: return "even";
    case BasisSelection::odd: return "odd";
    case BasisSelection::full: return "full";
  }
  return "full";
}

void run_approx(const RunConfig& c, Session& s) {
  const ApproxSpec& spec = *c.approx;
  const SampledSeed seed = s.seed();
  const RecursiveFamily family = s.family(seed);
  const GridFunction h = spec.target_kind == ApproxSpec::TargetKind::builtin
                             ? builtin_target(spec.target_name, s.grid())
                             : s.read_grid_csv(spec.target_path);

  std::ostringstream out;
  out << "N,L2_error,max_error,condition_estimate\n";
  std::optional<Projection> last;
  std::size_t last_n = 0;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    try {
      Projection p = least_squares_project(h, family, n, spec.basis);
      out << n << ',' << csv_number(p.l2_error) << ',' << csv_number(p.max_error) << ','
          << csv_number(p.condition_estimate) << '\n';
      last = std::move(p);
      last_n = n;
    } catch (const NumericalError& e) {
      if (!last) throw;
      s.warn("projection stopped at N = " + std::to_string(n) + ": " + e.what());
      break;
    }
  }
  s.emit("error_decay.csv", out.str());

  ojson j;
  j["command"] = "approx";
  j["basis"] = basis_name(spec.basis);
  j["target"] = spec.target_kind == ApproxSpec::TargetKind::builtin ? spec.target_name : spec.target_path.string();
  j["N"] = last_n;
  j["indices"] = last->indices;
  j["coefficients"] = complex_list_json(last->coefficients);
  j["l2_error"] = last->l2_error;
  j["max_error"] = last->max_error;
  s.emit("approx.json", dump(j));
}

RunResult failure(int code, const std::string& message) {
  RunResult r;
  r.exit_code = code;
  r.message = message;
  return r;
}

}  // namespace

RunResult execute(const RunConfig& config, std::ostream* log) {
  Session s(config, log);
  try {
    switch (config.command) {
      case Command::basis: run_basis(config, s); break;
      case Command::solve: run_solve(config, s); break;
      case Command::eigs: run_eigs(config, s); break;
      case Command::taylor: run_taylor(config, s); break;
      case Command::approx: run_approx(config, s); break;
    }
  } catch (const ValidationError& e) {
    return failure(kExitInvalidConfig, e.what());
  } catch (const ConfigError& e) {
    return failure(kExitInvalidConfig, e.what());
  } catch (const DomainError& e) {
    return failure(kExitInvalidConfig, e.what());
  } catch (const OrderError& e) {
    return failure(kExitInvalidConfig, e.what());
  } catch (const std::exception& e) {
    return failure(kExitNumericalFailure, e.what());
  }
  return std::move(s.result());
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::string manifest_json(const RunConfig& config, const std::string& config_sha256, const RunResult& result) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = to_string(config.command);
  j["config_sha256"] = config_sha256;
  j["library_version"] = kVersion;
  ojson files = ojson::array();
  for (const OutputFile& f : result.files) files.push_back({{"name", f.name}, {"sha256", sha256_hex(f.content)}});
  j["files"] = files;
  j["warnings"] = result.warnings;
  return dump(j);
}

int run(const Invocation& inv, std::ostream& err) {
  std::ifstream in(inv.config_path, std::ios::binary);
  if (!in) {
    err << "error: cannot read config " << inv.config_path.string() << '\n';
    return kExitInvalidConfig;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  RunConfig config;
  try {
    config = parse_config(text, inv.config_path.parent_path());
  } catch (const ValidationError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  if (inv.command && *inv.command != to_string(config.command)) {
    err << "config error: command line asks for '" << *inv.command << "' but the config runs '"
        << to_string(config.command) << "'\n";
    return kExitInvalidConfig;
  }
  const std::optional<std::filesystem::path> out_dir = inv.out_dir ? inv.out_dir : config.output_dir;
  if (!out_dir) {
    err << "config error: no output directory (use --out or output_dir)\n";
    return kExitInvalidConfig;
  }

  const RunResult result = execute(config, inv.verbose ? &err : nullptr);
  if (result.exit_code != kExitSuccess) {
    err << (result.exit_code == kExitInvalidConfig ? "config error: " : "numerical failure: ") << result.message
        << '\n';
    return result.exit_code;
  }

  try {
    std::filesystem::create_directories(*out_dir);
    auto write = [&](const std::string& name, const std::string& content) {
      std::ofstream f(*out_dir / name, std::ios::binary | std::ios::trunc);
      f << content;
      if (!f) throw std::runtime_error("cannot write " + (*out_dir / name).string());
    };
    for (const OutputFile& f : result.files) write(f.name, f.content);
    write("manifest.json", manifest_json(config, sha256_hex(text), result));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const std::string& w : result.warnings) err << "warning: " << w << '\n';
  return kExitSuccess;
}

}  // namespace sltaylor::cli
