#pragma once

/// Batch run configuration read from a JSON document (schema_version 1).
/// See docs/config.md for the full schema.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <sltaylor/gentaylor.hpp>
#include <sltaylor/grid.hpp>
#include <sltaylor/sturm.hpp>

namespace sltaylor::cli {

inline constexpr int kSchemaVersion = 1;

/// The configuration document is malformed or violates the schema.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { basis, solve, eigs, taylor, approx };

std::string to_string(Command c);

struct GridSpec {
  double a = 0.0;
  double b = 1.0;
  std::size_t n_nodes = kDefaultNodeCount;
  std::optional<double> x0;

  double anchor() const { return x0.value_or(a); }
};

struct SeedSpec {
  enum class Kind { builtin, from_q, csv };
  Kind kind = Kind::builtin;
  /// builtin: constant | exp | axexp
  std::string name;
  Complex value{1.0, 0.0};
  double c = 1.0;
  double a = 1.0;
  /// csv: f, and optionally f'
  std::filesystem::path path;
  std::optional<std::filesystem::path> derivative_path;
};

struct PotentialSpec {
  enum class Kind { constant, polynomial, csv };
  Kind kind = Kind::constant;
  /// polynomial coefficients in x, ascending; a constant is a degree-0 polynomial
  std::vector<Complex> coefficients;
  std::filesystem::path path;
};

struct BasisSpec {
  std::size_t max_order = 8;
};

struct SolveSpec {
  Complex lambda{0.0, 0.0};
  std::optional<std::size_t> n_terms;
  double truncation_tol = 1e-14;
  bool fail_on_cap = false;
};

struct EigsSpec {
  BoundaryCondition left = BoundaryCondition::dirichlet();
  BoundaryCondition right = BoundaryCondition::dirichlet();
  EigenOptions options{};
  bool write_scan = false;
};

struct TaylorSpec {
  std::size_t n = 5;
  std::optional<double> x0;
};

struct ApproxSpec {
  enum class TargetKind { builtin, csv };
  TargetKind target_kind = TargetKind::builtin;
  /// builtin: one | identity | exp | sin | cos | abs
  std::string target_name;
  std::filesystem::path target_path;
  BasisSelection basis = BasisSelection::full;
  std::size_t n_min = 1;
  std::size_t n_max = 8;
};

struct RunConfig {
  int schema_version = kSchemaVersion;
  Command command = Command::taylor;
  std::optional<GridSpec> grid;
  std::optional<SeedSpec> seed;
  std::optional<PotentialSpec> q;
  FamilyOptions family{};
  std::optional<BasisSpec> basis;
  std::optional<SolveSpec> solve;
  std::optional<EigsSpec> eigs;
  std::optional<TaylorSpec> taylor;
  std::optional<ApproxSpec> approx;
  std::optional<std::filesystem::path> output_dir;
};

/// Parses and validates a configuration document. Relative file paths are
/// resolved against base_dir. Throws ValidationError.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});

}  // namespace sltaylor::cli
