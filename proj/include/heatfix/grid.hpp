#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace heatfix {

/// Dense row-major 2D matrix. Index (x, y) addresses column x of row y.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), data_(width * height, fill) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t x, std::size_t y) { return data_[y * width_ + x]; }
  const T& operator()(std::size_t x, std::size_t y) const { return data_[y * width_ + x]; }

  T* row(std::size_t y) { return data_.data() + y * width_; }
  const T* row(std::size_t y) const { return data_.data() + y * width_; }

  std::vector<T>& values() noexcept { return data_; }
  const std::vector<T>& values() const noexcept { return data_; }

  bool same_shape(const Grid& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> data_;
};

using Map = Grid<double>;

template <typename T>
std::string shape_string(const Grid<T>& g) {
  return std::to_string(g.width()) + "x" + std::to_string(g.height());
}

/// Sum of all entries, accumulated in row-major order.
double total(const Map& m) noexcept;

double max_value(const Map& m) noexcept;

}  // namespace heatfix
