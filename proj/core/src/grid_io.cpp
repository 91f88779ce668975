#include "sltaylor/grid_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace sltaylor {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("number formatting failed");
  return std::string(buf, end);
}

void write_csv(std::ostream& out, const GridFunction& g) {
  out << "x,re,im\n";
  const auto x = g.grid().nodes();
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << format_double(x[i]) << ',' << format_double(g[i].real()) << ',' << format_double(g[i].imag())
        << '\n';
  }
}

namespace {

double parse_field(const std::string& field, std::size_t line) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError("CSV line " + std::to_string(line) + ": cannot parse number '" + field + "'");
  }
  return v;
}

}  // namespace

GridTable read_csv_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,re,im") throw ConfigError("CSV header must be 'x,re,im', got '" + line + "'");

  GridTable t;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::stringstream ss(line);
    std::string fx, fre, fim, extra;
    if (!std::getline(ss, fx, ',') || !std::getline(ss, fre, ',') || !std::getline(ss, fim, ',') ||
        std::getline(ss, extra, ',')) {
      throw ConfigError("CSV line " + std::to_string(lineno) + ": expected three columns");
    }
    t.x.push_back(parse_field(fx, lineno));
    t.values.emplace_back(parse_field(fre, lineno), parse_field(fim, lineno));
  }
  if (t.x.empty()) throw ConfigError("CSV has no data rows");
  return t;
}

GridFunction read_csv(std::istream& in, const GridPtr& grid) {
  GridTable t = read_csv_table(in);
  if (t.x.size() != grid->size()) {
    throw ConfigError("CSV has " + std::to_string(t.x.size()) + " rows, grid has " +
                      std::to_string(grid->size()) + " nodes");
  }
  const double scale = std::max(std::abs(grid->a()), std::abs(grid->b())) + (grid->b() - grid->a());
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    if (std::abs(t.x[i] - grid->node(i)) > 1e-12 * scale) {
      throw ConfigError("CSV row " + std::to_string(i) + ": x does not match grid node");
    }
  }
  return GridFunction(grid, std::move(t.values));
}

}  // namespace sltaylor
