#pragma once

#include <cstdint>

#include "heatfix/grid.hpp"
#include "heatfix/image.hpp"

namespace heatfix {

inline constexpr int kDefaultWindow = 3;

/// Per-pixel local Shannon entropy of a gray image, in bits.
struct EntropyMap {
  Map bits;
  int window = kDefaultWindow;

  std::size_t width() const noexcept { return bits.width(); }
  std::size_t height() const noexcept { return bits.height(); }
  double max_bits() const noexcept;
};

/// Largest entropy a window of the given size can reach: log2(min(256, w*w)).
double max_entropy_bits(int window) noexcept;

/// Throws InvalidWindow for even or < 3 windows, WindowTooLarge when the
/// window exceeds 2 * min(width, height) - 1.
void validate_window(int window, std::size_t width, std::size_t height);

/// Local entropy over a w x w window centred on every pixel. Out-of-range
/// neighbours are clamped to the nearest edge pixel, so each window holds
/// exactly w*w samples. Values below `epsilon` are set to 0.
EntropyMap local_entropy(const GrayImage& gray, int window = kDefaultWindow,
                         double epsilon = 0.0);

Grid<std::uint8_t> normalize_255(const EntropyMap& em);
Map normalize_unit(const EntropyMap& em);

}  // namespace heatfix
