#include "heatfix/correction.hpp"

#include <algorithm>

#include "heatfix/error.hpp"

namespace heatfix {

Map downsample_mean(const Map& unit, std::size_t cell_size) {
  if (cell_size == 0) throw Error(ErrorKind::InvalidArgument, "cell size must be >= 1");
  if (cell_size == 1) return unit;

  const std::size_t c = cell_size;
  Map out((unit.width() + c - 1) / c, (unit.height() + c - 1) / c);
  for (std::size_t cy = 0; cy < out.height(); ++cy) {
    const std::size_t y_end = std::min(unit.height(), (cy + 1) * c);
    for (std::size_t cx = 0; cx < out.width(); ++cx) {
      const std::size_t x_end = std::min(unit.width(), (cx + 1) * c);
      double sum = 0.0;
      for (std::size_t y = cy * c; y < y_end; ++y)
        for (std::size_t x = cx * c; x < x_end; ++x) sum += unit(x, y);
      const double count = static_cast<double>((y_end - cy * c) * (x_end - cx * c));
      out(cx, cy) = sum / count;
    }
  }
  return out;
}

Map downsample_entropy(const EntropyMap& em, std::size_t cell_size) {
  return downsample_mean(normalize_unit(em), cell_size);
}

CorrectedMap apply_correction(const DwellMap& dwell, const Map& weights) {
  if (!dwell.dwell.same_shape(weights))
    throw Error(ErrorKind::DimensionMismatch, "dimension mismatch: heat map " +
                                                  shape_string(dwell.dwell) + " vs weights " +
                                                  shape_string(weights));
  CorrectedMap out{Map(weights.width(), weights.height()), dwell.cell_size};
  for (std::size_t i = 0; i < weights.size(); ++i)
    out.values.values()[i] = dwell.dwell.values()[i] * weights.values()[i];
  return out;
}

}  // namespace heatfix
