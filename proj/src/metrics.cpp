#include "heatfix/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "heatfix/error.hpp"

namespace heatfix {

double pearson(const Map& a, const Map& b) {
  if (!a.same_shape(b))
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: " + shape_string(a) + " vs " + shape_string(b));
  if (a.empty()) throw Error(ErrorKind::ZeroVariance, "correlation of empty maps is undefined");

  const auto& va = a.values();
  const auto& vb = b.values();
  const double n = static_cast<double>(va.size());
  const double mean_a = total(a) / n;
  const double mean_b = total(b) / n;

  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double da = va[i] - mean_a;
    const double db = vb[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0)
    throw Error(ErrorKind::ZeroVariance, "correlation undefined: a map has zero variance");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

CenterOfGravity center_of_gravity(const Map& m, std::size_t cell_size) {
  if (cell_size == 0) throw Error(ErrorKind::InvalidArgument, "cell size must be >= 1");
  const double scale = static_cast<double>(cell_size);
  const double offset = cell_size == 1 ? 0.0 : 0.5;

  double mass = 0.0, mx = 0.0, my = 0.0;
  for (std::size_t y = 0; y < m.height(); ++y) {
    const double* row = m.row(y);
    const double py = (static_cast<double>(y) + offset) * scale;
    for (std::size_t x = 0; x < m.width(); ++x) {
      const double v = row[x];
      if (v == 0.0) continue;
      mass += v;
      mx += v * (static_cast<double>(x) + offset) * scale;
      my += v * py;
    }
  }
  if (!(mass > 0.0)) throw Error(ErrorKind::ZeroMass, "center of gravity undefined: map has zero mass");
  return {mx / mass, my / mass};
}

double euclidean(CenterOfGravity p, CenterOfGravity q) noexcept {
  return std::hypot(p.x - q.x, p.y - q.y);
}

ComparisonReport compare(const Map& a, const Map& b, std::size_t cell_size) {
  ComparisonReport r;
  r.correlation = pearson(a, b);
  r.cog_a = center_of_gravity(a, cell_size);
  r.cog_b = center_of_gravity(b, cell_size);
  r.distance = euclidean(r.cog_a, r.cog_b);
  return r;
}

}  // namespace heatfix
