#include "heatfix/grid_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "heatfix/error.hpp"

namespace heatfix {

namespace {

constexpr std::string_view kMagic = "gridmap";
constexpr std::string_view kVersion = "v1";

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::GridFormat, "grid line " + std::to_string(line) + ": " + what, line);
}

}  // namespace

void write_grid(std::ostream& out, const GridFile& grid) {
  const Map& m = grid.values;
  out << kMagic << ' ' << kVersion << ' ' << m.width() << ' ' << m.height() << ' '
      << grid.cell_size << '\n';
  std::string line;
  char buf[32];
  for (std::size_t y = 0; y < m.height(); ++y) {
    line.clear();
    const double* row = m.row(y);
    for (std::size_t x = 0; x < m.width(); ++x) {
      if (x > 0) line.push_back(' ');
      // -0.0 would print as "-0"; the format only carries non-negative values.
      const double v = row[x] == 0.0 ? 0.0 : row[x];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
      line.append(buf, end);
    }
    line.push_back('\n');
    out << line;
  }
}

void save_grid(const std::filesystem::path& path, const GridFile& grid) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_grid(out, grid);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

GridFile read_grid(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) format_error(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream header(line);
  std::string magic, version;
  long long width = -1, height = -1, cell = -1;
  std::string extra;
  if (!(header >> magic >> version >> width >> height >> cell) || magic != kMagic ||
      version != kVersion || (header >> extra))
    format_error(1, "expected 'gridmap v1 <width> <height> <cell_size>'");
  if (width < 1 || height < 1 || cell < 1) format_error(1, "dimensions and cell size must be >= 1");

  GridFile grid{Map(static_cast<std::size_t>(width), static_cast<std::size_t>(height)),
                static_cast<std::size_t>(cell)};
  for (std::size_t y = 0; y < grid.values.height(); ++y) {
    const std::size_t lineno = y + 2;
    if (!std::getline(in, line)) format_error(lineno, "missing row");
    const char* p = line.data();
    const char* end = line.data() + line.size();
    if (p != end && end[-1] == '\r') --end;
    double* row = grid.values.row(y);
    std::size_t x = 0;
    while (true) {
      while (p != end && *p == ' ') ++p;
      if (p == end) break;
      if (x == grid.values.width()) format_error(lineno, "too many values");
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc{} || (next != end && *next != ' ')) format_error(lineno, "invalid number");
      if (!std::isfinite(v) || v < 0.0) format_error(lineno, "values must be finite and >= 0");
      row[x++] = v;
      p = next;
    }
    if (x != grid.values.width())
      format_error(lineno, "expected " + std::to_string(width) + " values, got " + std::to_string(x));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \r\t") != std::string::npos)
      format_error(static_cast<std::size_t>(height) + 2, "unexpected trailing data");
  }
  return grid;
}

GridFile load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return read_grid(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what(), e.line());
  }
}

}  // namespace heatfix
