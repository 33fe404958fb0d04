#pragma once

#include "heatfix/grid.hpp"

namespace heatfix {

struct CenterOfGravity {
  double x = 0.0;
  double y = 0.0;
};

struct ComparisonReport {
  double correlation = 0.0;
  CenterOfGravity cog_a;
  CenterOfGravity cog_b;
  double distance = 0.0;
};

/// Pearson product-moment correlation over all cells, zeros included.
/// Throws DimensionMismatch, or ZeroVariance if either map is constant.
double pearson(const Map& a, const Map& b);

/// Mass-weighted mean position in pixels. Cell centres are the integer
/// pixel index at cell_size 1 and (index + 0.5) * cell_size otherwise.
/// Throws ZeroMass when the map sums to zero.
CenterOfGravity center_of_gravity(const Map& m, std::size_t cell_size = 1);

double euclidean(CenterOfGravity p, CenterOfGravity q) noexcept;

ComparisonReport compare(const Map& a, const Map& b, std::size_t cell_size = 1);

}  // namespace heatfix
