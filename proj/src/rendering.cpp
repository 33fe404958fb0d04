#include "heatfix/rendering.hpp"

#include <algorithm>
#include <cmath>

#include "heatfix/error.hpp"

namespace heatfix {

namespace {

std::uint8_t round_channel(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace

ColorRamp::ColorRamp(std::vector<ColorStop> stops) : stops_(std::move(stops)) {
  if (stops_.size() < 2) throw Error(ErrorKind::InvalidArgument, "color ramp needs at least two stops");
  if (stops_.front().position != 0.0 || stops_.back().position != 1.0)
    throw Error(ErrorKind::InvalidArgument, "color ramp must start at 0 and end at 1");
  for (std::size_t i = 1; i < stops_.size(); ++i)
    if (!(stops_[i].position > stops_[i - 1].position))
      throw Error(ErrorKind::InvalidArgument, "color ramp positions must strictly increase");
}

ColorRamp ColorRamp::heat() {
  return ColorRamp({{0.0, {0, 0, 255}},
                    {0.25, {0, 255, 255}},
                    {0.5, {0, 255, 0}},
                    {0.75, {255, 255, 0}},
                    {1.0, {255, 0, 0}}});
}

ColorRamp ColorRamp::grayscale() { return ColorRamp({{0.0, {0, 0, 0}}, {1.0, {255, 255, 255}}}); }

Rgb8 ColorRamp::sample(double t) const noexcept {
  if (!(t > 0.0)) return stops_.front().color;
  if (t >= 1.0) return stops_.back().color;
  auto hi = std::upper_bound(stops_.begin(), stops_.end(), t,
                             [](double v, const ColorStop& s) { return v < s.position; });
  auto lo = hi - 1;
  const double f = (t - lo->position) / (hi->position - lo->position);
  auto mix = [f](std::uint8_t a, std::uint8_t b) { return round_channel(a + (b - a) * f); };
  return {mix(lo->color.r, hi->color.r), mix(lo->color.g, hi->color.g),
          mix(lo->color.b, hi->color.b)};
}

std::vector<double> gaussian_kernel(double sigma) {
  if (sigma < 0.0) throw Error(ErrorKind::InvalidArgument, "blur sigma must be >= 0");
  if (sigma == 0.0) return {1.0};
  const auto radius = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
  std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (std::ptrdiff_t i = -radius; i <= radius; ++i) {
    const double v = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    taps[static_cast<std::size_t>(i + radius)] = v;
    sum += v;
  }
  for (double& v : taps) v /= sum;
  return taps;
}

Map gaussian_blur(const Map& m, double sigma) {
  const std::vector<double> taps = gaussian_kernel(sigma);
  if (taps.size() == 1 || m.empty()) return m;

  const auto radius = static_cast<std::ptrdiff_t>(taps.size() / 2);
  const auto w = static_cast<std::ptrdiff_t>(m.width());
  const auto h = static_cast<std::ptrdiff_t>(m.height());

  Map horizontal(m.width(), m.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    const double* src = m.row(static_cast<std::size_t>(y));
    double* dst = horizontal.row(static_cast<std::size_t>(y));
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t k = -radius; k <= radius; ++k)
        acc += taps[static_cast<std::size_t>(k + radius)] * src[std::clamp<std::ptrdiff_t>(x + k, 0, w - 1)];
      dst[x] = acc;
    }
  }

  Map out(m.width(), m.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    double* dst = out.row(static_cast<std::size_t>(y));
    for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
      const double tap = taps[static_cast<std::size_t>(k + radius)];
      const double* src = horizontal.row(static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(y + k, 0, h - 1)));
      for (std::ptrdiff_t x = 0; x < w; ++x) dst[x] += tap * src[x];
    }
  }
  for (double& v : out.values()) v = std::max(v, 0.0);
  return out;
}

RgbaImage colorize(const Map& m, const ColorRamp& ramp, bool zero_transparent) {
  RgbaImage img(m.width(), m.height());
  const double peak = max_value(m);
  if (!(peak > 0.0)) return img;
  for (std::size_t y = 0; y < m.height(); ++y) {
    for (std::size_t x = 0; x < m.width(); ++x) {
      const double v = m(x, y);
      if (zero_transparent && !(v > 0.0)) continue;
      const Rgb8 c = ramp.sample(v / peak);
      img.set(x, y, {c.r, c.g, c.b, 255});
    }
  }
  return img;
}

RasterImage overlay(const RasterImage& background, const RgbaImage& heat, double alpha) {
  if (background.width() != heat.width() || background.height() != heat.height())
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: background " + std::to_string(background.width()) + "x" +
                    std::to_string(background.height()) + " vs heat " +
                    std::to_string(heat.width()) + "x" + std::to_string(heat.height()));
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "overlay alpha must lie in [0, 1]");

  RasterImage out = background;
  if (alpha == 0.0) return out;
  for (std::size_t y = 0; y < out.height(); ++y) {
    for (std::size_t x = 0; x < out.width(); ++x) {
      const Rgba8 top = heat.at(x, y);
      if (top.a == 0) continue;
      const double a = alpha * (top.a / 255.0);
      const Rgb8 bottom = background.at(x, y);
      auto blend = [a](std::uint8_t src, std::uint8_t dst) {
        return round_channel(src * a + dst * (1.0 - a));
      };
      out.set(x, y, {blend(top.r, bottom.r), blend(top.g, bottom.g), blend(top.b, bottom.b)});
    }
  }
  return out;
}

Map upscale_nearest(const Map& cells, std::size_t cell_size, std::size_t width, std::size_t height) {
  if (cell_size == 0) throw Error(ErrorKind::InvalidArgument, "cell size must be >= 1");
  Map out(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    const std::size_t cy = std::min(y / cell_size, cells.height() - 1);
    for (std::size_t x = 0; x < width; ++x)
      out(x, y) = cells(std::min(x / cell_size, cells.width() - 1), cy);
  }
  return out;
}

}  // namespace heatfix

namespace heatfix {

RgbaImage render_heat(const Map& cells, std::size_t cell_size, std::size_t width,
                      std::size_t height, const RenderOptions& options) {
  const Map pixels = upscale_nearest(cells, cell_size, width, height);
  return colorize(gaussian_blur(pixels, options.blur_sigma), options.ramp, options.zero_transparent);
}

RasterImage render_overlay(const Map& cells, std::size_t cell_size, const RasterImage& background,
                           const RenderOptions& options) {
  const std::size_t c = cell_size;
  if ((background.width() + c - 1) / c != cells.width() ||
      (background.height() + c - 1) / c != cells.height())
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: map " + shape_string(cells) + " (cell " + std::to_string(c) +
                    ") vs background " + std::to_string(background.width()) + "x" +
                    std::to_string(background.height()));
  const RgbaImage heat =
      render_heat(cells, cell_size, background.width(), background.height(), options);
  return overlay(background, heat, options.overlay_alpha);
}

}  // namespace heatfix
