#include "sltaylor_cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "json.hpp"

namespace sltaylor::cli {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::basis: return "basis";
    case Command::solve: return "solve";
    case Command::eigs: return "eigs";
    case Command::taylor: return "taylor";
    case Command::approx: return "approx";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

/// Typed access to one JSON object, with the dotted path kept for messages.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  bool has(const char* key) const { return j_.contains(key); }

  void allow_only(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : j_.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        fail(path_, "unknown key '" + k + "'");
      }
    }
  }

  Node object(const char* key) const {
    if (!has(key)) fail(path_, "missing key '" + std::string(key) + "'");
    return Node(j_.at(key), child(key));
  }

  std::optional<Node> optional_object(const char* key) const {
    if (!has(key)) return std::nullopt;
    return Node(j_.at(key), child(key));
  }

  double number(const char* key) const {
    const json& v = at(key);
    if (!v.is_number()) fail(child(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(child(key), "must be finite");
    return d;
  }
  double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

  double positive(const char* key, double fallback) const {
    const double d = number(key, fallback);
    if (!(d > 0.0)) fail(child(key), "must be positive");
    return d;
  }

  std::size_t count(const char* key) const {
    const json& v = at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(child(key), "expected a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
  }
  std::size_t count(const char* key, std::size_t fallback) const { return has(key) ? count(key) : fallback; }

  bool flag(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_boolean()) fail(child(key), "expected true or false");
    return v.get<bool>();
  }

  std::string text(const char* key) const {
    const json& v = at(key);
    if (!v.is_string()) fail(child(key), "expected a string");
    return v.get<std::string>();
  }

  /// A number, or a two-element array [re, im].
  Complex complex(const char* key) const { return to_complex(at(key), child(key)); }
  Complex complex(const char* key, Complex fallback) const { return has(key) ? complex(key) : fallback; }

  std::vector<Complex> complex_list(const char* key) const {
    const json& v = at(key);
    if (!v.is_array() || v.empty()) fail(child(key), "expected a non-empty array");
    std::vector<Complex> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_complex(v[i], child(key) + "[" + std::to_string(i) + "]"));
    return out;
  }

  static Complex to_complex(const json& v, const std::string& where) {
    double re = 0.0;
    double im = 0.0;
    if (v.is_number()) {
      re = v.get<double>();
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      re = v[0].get<double>();
      im = v[1].get<double>();
    } else {
      fail(where, "expected a number or [re, im]");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) fail(where, "must be finite");
    return {re, im};
  }

 private:
  const json& at(const char* key) const {
    if (!has(key)) fail(path_, "missing key '" + std::string(key) + "'");
    return j_.at(key);
  }
  std::string child(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& j_;
  std::string path_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty()) throw ValidationError("empty file path");
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

Command parse_command(const std::string& s) {
  for (Command c : {Command::basis, Command::solve, Command::eigs, Command::taylor, Command::approx}) {
    if (to_string(c) == s) return c;
  }
  fail("command", "must be one of basis, solve, eigs, taylor, approx (got '" + s + "')");
}

GridSpec parse_grid(const Node& n) {
  n.allow_only({"a", "b", "n_nodes", "x0"});
  GridSpec g;
  g.a = n.number("a");
  g.b = n.number("b");
  g.n_nodes = n.count("n_nodes", kDefaultNodeCount);
  if (n.has("x0")) g.x0 = n.number("x0");
  if (!(g.a < g.b)) fail(n.path(), "requires a < b");
  if (g.n_nodes < kQuadratureStencil + 1) {
    fail(n.path() + ".n_nodes", "needs at least " + std::to_string(kQuadratureStencil + 1) + " nodes");
  }
  if (g.x0 && (*g.x0 < g.a || *g.x0 > g.b)) fail(n.path() + ".x0", "must lie in [a, b]");
  return g;
}

SeedSpec parse_seed(const Node& n, const std::filesystem::path& base) {
  n.allow_only({"kind", "name", "parameters"});
  SeedSpec s;
  const std::string kind = n.text("kind");
  if (kind == "builtin") {
    s.kind = SeedSpec::Kind::builtin;
    s.name = n.text("name");
    const std::optional<Node> p = n.optional_object("parameters");
    static const json empty = json::object();
    const Node params = p ? *p : Node(empty, n.path() + ".parameters");
    if (s.name == "constant") {
      params.allow_only({"value"});
      s.value = params.complex("value", Complex{1.0, 0.0});
      if (std::abs(s.value) == 0.0) fail(params.path() + ".value", "must be nonzero");
    } else if (s.name == "exp") {
      params.allow_only({"c"});
      s.c = params.number("c", 1.0);
    } else if (s.name == "axexp") {
      params.allow_only({"a"});
      s.a = params.number("a", 1.0);
      if (s.a == 0.0) fail(params.path() + ".a", "must be nonzero");
    } else {
      fail(n.path() + ".name", "builtin seed must be constant, exp or axexp (got '" + s.name + "')");
    }
  } else if (kind == "from_q") {
    s.kind = SeedSpec::Kind::from_q;
    if (n.has("name") || n.has("parameters")) fail(n.path(), "from_q takes no name or parameters");
  } else if (kind == "csv") {
    s.kind = SeedSpec::Kind::csv;
    if (n.has("name")) fail(n.path(), "csv seed takes no name");
    const Node params = n.object("parameters");
    params.allow_only({"path", "derivative_path"});
    s.path = resolve(base, params.text("path"));
    if (params.has("derivative_path")) s.derivative_path = resolve(base, params.text("derivative_path"));
  } else {
    fail(n.path() + ".kind", "must be builtin, from_q or csv (got '" + kind + "')");
  }
  return s;
}

PotentialSpec parse_potential(const Node& n, const std::filesystem::path& base) {
  PotentialSpec q;
  const std::string kind = n.text("kind");
  if (kind == "constant") {
    n.allow_only({"kind", "value"});
    q.kind = PotentialSpec::Kind::constant;
    q.coefficients = {n.complex("value")};
  } else if (kind == "polynomial") {
    n.allow_only({"kind", "coefficients"});
    q.kind = PotentialSpec::Kind::polynomial;
    q.coefficients = n.complex_list("coefficients");
  } else if (kind == "csv") {
    n.allow_only({"kind", "path"});
    q.kind = PotentialSpec::Kind::csv;
    q.path = resolve(base, n.text("path"));
  } else {
    fail(n.path() + ".kind", "must be constant, polynomial or csv (got '" + kind + "')");
  }
  return q;
}

BoundaryCondition parse_bc(const Node& n) {
  n.allow_only({"value", "slope"});
  BoundaryCondition bc{n.complex("value", Complex{0.0, 0.0}), n.complex("slope", Complex{0.0, 0.0})};
  if (bc.value == Complex{0.0, 0.0} && bc.slope == Complex{0.0, 0.0}) {
    fail(n.path(), "value and slope cannot both be zero");
  }
  return bc;
}

EigsSpec parse_eigs(const Node& n) {
  n.allow_only({"bc", "range", "scan_points", "tol", "truncation_tol", "write_scan"});
  EigsSpec e;
  const Node bc = n.object("bc");
  bc.allow_only({"left", "right"});
  e.left = parse_bc(bc.object("left"));
  e.right = parse_bc(bc.object("right"));
  const Node range = n.object("range");
  range.allow_only({"lambda_min", "lambda_max"});
  e.options.lambda_min = range.number("lambda_min");
  e.options.lambda_max = range.number("lambda_max");
  if (!(e.options.lambda_min < e.options.lambda_max)) fail(range.path(), "requires lambda_min < lambda_max");
  e.options.scan_points = n.count("scan_points", e.options.scan_points);
  if (e.options.scan_points < 2) fail(n.path() + ".scan_points", "needs at least 2 points");
  e.options.tol = n.positive("tol", e.options.tol);
  e.options.truncation_tol = n.positive("truncation_tol", e.options.truncation_tol);
  e.write_scan = n.flag("write_scan", false);
  return e;
}

ApproxSpec parse_approx(const Node& n, const std::filesystem::path& base) {
  n.allow_only({"target", "basis", "n_min", "n_max"});
  ApproxSpec a;
  const Node target = n.object("target");
  const std::string kind = target.text("kind");
  if (kind == "builtin") {
    target.allow_only({"kind", "name"});
    a.target_kind = ApproxSpec::TargetKind::builtin;
    a.target_name = target.text("name");
    const auto& names = {"one", "identity", "exp", "sin", "cos", "abs"};
    if (std::none_of(names.begin(), names.end(), [&](const char* s) { return a.target_name == s; })) {
      fail(target.path() + ".name", "unknown target '" + a.target_name + "'");
    }
  } else if (kind == "csv") {
    target.allow_only({"kind", "path"});
    a.target_kind = ApproxSpec::TargetKind::csv;
    a.target_path = resolve(base, target.text("path"));
  } else {
    fail(target.path() + ".kind", "must be builtin or csv");
  }
  const std::string basis = n.has("basis") ? n.text("basis") : "full";
  if (basis == "even") a.basis = BasisSelection::even;
  else if (basis == "odd") a.basis = BasisSelection::odd;
  else if (basis == "full") a.basis = BasisSelection::full;
  else fail(n.path() + ".basis", "must be even, odd or full");
  a.n_min = n.count("n_min", 1);
  a.n_max = n.count("n_max");
  if (a.n_min < 1 || a.n_min > a.n_max) fail(n.path(), "requires 1 <= n_min <= n_max");
  return a;
}

/// Highest family index a command touches, checked against family.order.
std::size_t required_order(const RunConfig& c) {
  switch (c.command) {
    case Command::basis: return c.basis->max_order;
    case Command::solve: return c.solve->n_terms ? 2 * *c.solve->n_terms - 1 : 1;
    case Command::approx: {
      const std::size_t n = c.approx->n_max;
      return c.approx->basis == BasisSelection::full ? n - 1 : 2 * n - (c.approx->basis == BasisSelection::odd ? 1 : 2);
    }
    default: return 1;
  }
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  const Node root(j, "");
  root.allow_only({"schema_version", "command", "grid", "seed", "q", "family", "basis", "solve", "eigs", "taylor",
                   "approx", "output_dir"});

  RunConfig c;
  const std::size_t version = root.count("schema_version");
  if (version != static_cast<std::size_t>(kSchemaVersion)) {
    fail("schema_version", "unsupported version " + std::to_string(version));
  }
  c.command = parse_command(root.text("command"));
  if (root.has("grid")) c.grid = parse_grid(root.object("grid"));
  if (root.has("seed")) c.seed = parse_seed(root.object("seed"), base_dir);
  if (root.has("q")) c.q = parse_potential(root.object("q"), base_dir);
  if (root.has("output_dir")) c.output_dir = resolve(base_dir, root.text("output_dir"));
  if (const auto fam = root.optional_object("family")) {
    fam->allow_only({"order", "seed_threshold"});
    c.family.order = fam->count("order", kDefaultFamilyOrder);
    c.family.seed_threshold = fam->positive("seed_threshold", kDefaultSeedThreshold);
    if (c.family.order < 1) fail("family.order", "must be at least 1");
  }

  const std::string cmd = to_string(c.command);
  for (const char* block : {"basis", "solve", "eigs", "taylor", "approx"}) {
    if (root.has(block) && cmd != block) fail(block, "block does not belong to command '" + cmd + "'");
  }
  if (!root.has(cmd.c_str())) fail("", "missing '" + cmd + "' block");
  const Node block = root.object(cmd.c_str());

  switch (c.command) {
    case Command::basis: {
      block.allow_only({"max_order"});
      c.basis = BasisSpec{block.count("max_order")};
      break;
    }
    case Command::solve: {
      block.allow_only({"lambda", "n_terms", "truncation_tol", "fail_on_cap"});
      SolveSpec s;
      s.lambda = block.complex("lambda");
      if (block.has("n_terms")) {
        s.n_terms = block.count("n_terms");
        if (*s.n_terms < 1) fail("solve.n_terms", "must be at least 1");
      }
      s.truncation_tol = block.positive("truncation_tol", s.truncation_tol);
      s.fail_on_cap = block.flag("fail_on_cap", false);
      c.solve = s;
      break;
    }
    case Command::eigs: c.eigs = parse_eigs(block); break;
    case Command::taylor: {
      block.allow_only({"n", "x0"});
      TaylorSpec t;
      t.n = block.count("n");
      if (block.has("x0")) t.x0 = block.number("x0");
      c.taylor = t;
      break;
    }
    case Command::approx: c.approx = parse_approx(block, base_dir); break;
  }

  const bool builtin_seed = c.seed && c.seed->kind == SeedSpec::Kind::builtin;
  if (c.command == Command::eigs) {
    if (!c.q) fail("q", "eigs needs a potential");
    if (c.seed && c.seed->kind != SeedSpec::Kind::from_q) fail("seed", "eigs builds its seed from q");
    if (c.grid && c.grid->x0 && *c.grid->x0 != c.grid->a) fail("grid.x0", "eigs anchors at a");
  } else if (!c.seed) {
    fail("", "missing 'seed' block");
  }
  if (c.seed && c.seed->kind == SeedSpec::Kind::from_q && !c.q) fail("q", "seed kind from_q needs a potential");
  if (c.command != Command::taylor || !builtin_seed) {
    if (!c.grid) fail("", "missing 'grid' block");
  }
  if (c.command == Command::taylor) {
    if (!c.taylor->x0 && !(c.grid && c.grid->x0)) fail("taylor.x0", "anchor missing (taylor.x0 or grid.x0)");
    if (c.grid && c.taylor->x0 && (*c.taylor->x0 < c.grid->a || *c.taylor->x0 > c.grid->b)) {
      fail("taylor.x0", "must lie in [grid.a, grid.b]");
    }
    if (builtin_seed && c.seed->name == "axexp" && c.taylor->x0.value_or(c.grid ? c.grid->anchor() : 0.0) == 0.0) {
      fail("taylor.x0", "axexp seed is undefined at 0");
    }
  }
  if (required_order(c) > c.family.order) {
    fail("family.order", "command needs order " + std::to_string(required_order(c)) + " but family.order is " +
                             std::to_string(c.family.order));
  }
  return c;
}

}  // namespace sltaylor::cli
