#pragma once

#include "heatfix/entropy_map.hpp"
#include "heatfix/grid.hpp"
#include "heatfix/tracking.hpp"

namespace heatfix {

struct CorrectedMap {
  Map values;
  std::size_t cell_size = 1;
};

/// Block mean of the unit-normalized entropy over cell_size x cell_size
/// pixel blocks. Edge blocks average only the pixels they cover.
Map downsample_entropy(const EntropyMap& em, std::size_t cell_size);
Map downsample_mean(const Map& unit, std::size_t cell_size);

/// Element-wise product of dwell and weights. Throws DimensionMismatch.
CorrectedMap apply_correction(const DwellMap& dwell, const Map& weights);

}  // namespace heatfix
