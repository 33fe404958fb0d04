#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "heatfix/grid.hpp"

namespace heatfix {

/// Text grid: "gridmap v1 <width> <height> <cell_size>" then one line of
/// space-separated shortest round-trip decimals per row.
struct GridFile {
  Map values;
  std::size_t cell_size = 1;
};

void write_grid(std::ostream& out, const GridFile& grid);
void save_grid(const std::filesystem::path& path, const GridFile& grid);

/// Throws Error{GridFormat} on malformed content, negative or non-finite values.
GridFile read_grid(std::istream& in);
GridFile load_grid(const std::filesystem::path& path);

}  // namespace heatfix
