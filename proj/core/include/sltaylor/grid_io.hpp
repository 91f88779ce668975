#pragma once

/// CSV serialization of grid functions: header `x,re,im`, one row per node,
/// '.' decimal separator, shortest round-trip number formatting.

#include <iosfwd>
#include <string>
#include <vector>

#include "sltaylor/grid.hpp"

namespace sltaylor {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

void write_csv(std::ostream& out, const GridFunction& g);

/// Raw table read back from a grid-function CSV.
struct GridTable {
  std::vector<double> x;
  std::vector<Complex> values;
};

/// Parses a CSV with header x,re,im. Throws ConfigError on malformed input.
GridTable read_csv_table(std::istream& in);

/// Reads a CSV whose x column must match the nodes of `grid` (to 1e-12 relative).
GridFunction read_csv(std::istream& in, const GridPtr& grid);

}  // namespace sltaylor
