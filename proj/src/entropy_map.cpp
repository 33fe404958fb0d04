#include "heatfix/entropy_map.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "heatfix/error.hpp"

namespace heatfix {

double max_entropy_bits(int window) noexcept {
  const double samples = static_cast<double>(window) * window;
  return std::log2(std::min(256.0, samples));
}

double EntropyMap::max_bits() const noexcept { return max_entropy_bits(window); }

void validate_window(int window, std::size_t width, std::size_t height) {
  if (window < 3 || window % 2 == 0)
    throw Error(ErrorKind::InvalidWindow,
                "window must be odd and >= 3 (got " + std::to_string(window) + ")");
  const std::size_t limit = 2 * std::min(width, height) - 1;
  if (static_cast<std::size_t>(window) > limit)
    throw Error(ErrorKind::WindowTooLarge, "window " + std::to_string(window) +
                                               " too large for " + std::to_string(width) + "x" +
                                               std::to_string(height) + " image (max " +
                                               std::to_string(limit) + ")");
}

namespace {

// Sliding gray-level histogram over a fixed set of rows. Tracks
// sum(c * log2 c) so the entropy of the window is log2 N - sum / N.
class WindowHistogram {
 public:
  explicit WindowHistogram(const std::vector<double>& c_log_c) : c_log_c_(c_log_c) {}

  void add(std::uint8_t level) {
    std::uint32_t& c = counts_[level];
    if (c == 0) ++distinct_;
    weighted_ += c_log_c_[c + 1] - c_log_c_[c];
    ++c;
  }

  void remove(std::uint8_t level) {
    std::uint32_t& c = counts_[level];
    weighted_ += c_log_c_[c - 1] - c_log_c_[c];
    --c;
    if (c == 0) --distinct_;
  }

  double entropy(double samples, double log2_samples, double max_bits) const {
    if (distinct_ <= 1) return 0.0;
    const double h = log2_samples - weighted_ / samples;
    return std::clamp(h, 0.0, max_bits);
  }

  void clear() {
    counts_.fill(0);
    distinct_ = 0;
    weighted_ = 0.0;
  }

 private:
  const std::vector<double>& c_log_c_;
  std::array<std::uint32_t, 256> counts_{};
  int distinct_ = 0;
  double weighted_ = 0.0;
};

}  // namespace

EntropyMap local_entropy(const GrayImage& gray, int window, double epsilon) {
  if (gray.empty()) throw Error(ErrorKind::InvalidArgument, "empty image");
  validate_window(window, gray.width(), gray.height());

  const auto w = static_cast<std::ptrdiff_t>(gray.width());
  const auto h = static_cast<std::ptrdiff_t>(gray.height());
  const std::ptrdiff_t radius = window / 2;
  const std::size_t samples = static_cast<std::size_t>(window) * window;

  std::vector<double> c_log_c(samples + 1, 0.0);
  for (std::size_t c = 1; c <= samples; ++c)
    c_log_c[c] = static_cast<double>(c) * std::log2(static_cast<double>(c));

  const double n = static_cast<double>(samples);
  const double log2_n = std::log2(n);
  const double max_bits = max_entropy_bits(window);

  auto clamp_x = [w](std::ptrdiff_t x) { return std::clamp<std::ptrdiff_t>(x, 0, w - 1); };
  auto clamp_y = [h](std::ptrdiff_t y) { return std::clamp<std::ptrdiff_t>(y, 0, h - 1); };

  EntropyMap em{Map(gray.width(), gray.height()), window};
  WindowHistogram hist(c_log_c);
  std::vector<const std::uint8_t*> rows(static_cast<std::size_t>(window));

  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t k = 0; k < window; ++k)
      rows[static_cast<std::size_t>(k)] = gray.row(static_cast<std::size_t>(clamp_y(y - radius + k)));

    auto add_column = [&](std::ptrdiff_t x) {
      for (const std::uint8_t* r : rows) hist.add(r[x]);
    };
    auto remove_column = [&](std::ptrdiff_t x) {
      for (const std::uint8_t* r : rows) hist.remove(r[x]);
    };

    hist.clear();
    for (std::ptrdiff_t dx = -radius; dx <= radius; ++dx) add_column(clamp_x(dx));

    double* out = em.bits.row(static_cast<std::size_t>(y));
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      if (x > 0) {
        remove_column(clamp_x(x - 1 - radius));
        add_column(clamp_x(x + radius));
      }
      const double bits = hist.entropy(n, log2_n, max_bits);
      out[x] = bits < epsilon ? 0.0 : bits;
    }
  }
  return em;
}

Grid<std::uint8_t> normalize_255(const EntropyMap& em) {
  const double max_bits = em.max_bits();
  Grid<std::uint8_t> out(em.width(), em.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double bits = em.bits.values()[i];
    double level = std::floor(255.0 * bits / max_bits);
    // 255 is reserved for windows that actually reach the maximum.
    if (bits < max_bits) level = std::min(level, 254.0);
    out.values()[i] = static_cast<std::uint8_t>(std::clamp(level, 0.0, 255.0));
  }
  return out;
}

Map normalize_unit(const EntropyMap& em) {
  const double max_bits = em.max_bits();
  Map out(em.width(), em.height());
  for (std::size_t i = 0; i < out.size(); ++i)
    out.values()[i] = std::clamp(em.bits.values()[i] / max_bits, 0.0, 1.0);
  return out;
}

}  // namespace heatfix
