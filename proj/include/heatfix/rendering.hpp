#pragma once

#include <vector>

#include "heatfix/grid.hpp"
#include "heatfix/image.hpp"

namespace heatfix {

struct ColorStop {
  double position = 0.0;
  Rgb8 color;
};

/// Piecewise-linear color ramp over [0, 1].
class ColorRamp {
 public:
  /// Throws InvalidArgument unless there are at least two stops, positions
  /// strictly increase, the first is 0 and the last is 1.
  explicit ColorRamp(std::vector<ColorStop> stops);

  /// blue, cyan, green, yellow, red at 0, .25, .5, .75, 1.
  static ColorRamp heat();
  static ColorRamp grayscale();

  Rgb8 sample(double t) const noexcept;
  const std::vector<ColorStop>& stops() const noexcept { return stops_; }

 private:
  std::vector<ColorStop> stops_;
};

inline constexpr double kDefaultBlurSigma = 8.0;
inline constexpr double kDefaultOverlayAlpha = 0.6;

struct RenderOptions {
  double blur_sigma = kDefaultBlurSigma;
  double overlay_alpha = kDefaultOverlayAlpha;
  ColorRamp ramp = ColorRamp::heat();
  bool zero_transparent = true;
};

/// Normalized 1D Gaussian taps, radius ceil(3 sigma).
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur with edge replication. sigma == 0 is identity.
Map gaussian_blur(const Map& m, double sigma);

/// Values are divided by the map maximum and sampled through the ramp.
/// An all-zero map is fully transparent.
RgbaImage colorize(const Map& m, const ColorRamp& ramp, bool zero_transparent);

/// Source-over compositing of `heat` onto `background`, with heat alpha
/// scaled by `alpha`. Throws DimensionMismatch or InvalidArgument.
RasterImage overlay(const RasterImage& background, const RgbaImage& heat, double alpha);

/// Nearest-neighbour upscale of a cell grid to pixels, cropped to
/// width x height.
Map upscale_nearest(const Map& cells, std::size_t cell_size, std::size_t width,
                    std::size_t height);

}  // namespace heatfix

namespace heatfix {

/// Upscales a cell map to width x height pixels, blurs and colorizes it.
RgbaImage render_heat(const Map& cells, std::size_t cell_size, std::size_t width,
                      std::size_t height, const RenderOptions& options);

/// render_heat composited over a screenshot of matching size.
RasterImage render_overlay(const Map& cells, std::size_t cell_size, const RasterImage& background,
                           const RenderOptions& options);

}  // namespace heatfix
