#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "heatfix/grid.hpp"

namespace heatfix {

struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

struct Rgba8 {
  std::uint8_t r = 0, g = 0, b = 0, a = 0;
  friend bool operator==(const Rgba8&, const Rgba8&) = default;
};

/// 8-bit RGB raster. Pixels are stored interleaved, row-major.
class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(std::size_t width, std::size_t height, Rgb8 fill = {});

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  Rgb8 at(std::size_t x, std::size_t y) const;
  void set(std::size_t x, std::size_t y, Rgb8 c);

  // Interleaved RGB bytes, length width * height * 3.
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t>& bytes() noexcept { return bytes_; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bytes_;
};

/// 8-bit RGBA raster (straight, non-premultiplied alpha).
class RgbaImage {
 public:
  RgbaImage() = default;
  RgbaImage(std::size_t width, std::size_t height, Rgba8 fill = {});

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  Rgba8 at(std::size_t x, std::size_t y) const;
  void set(std::size_t x, std::size_t y, Rgba8 c);

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t>& bytes() noexcept { return bytes_; }

  friend bool operator==(const RgbaImage&, const RgbaImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bytes_;
};

/// One gray level (0-255) per pixel.
using GrayImage = Grid<std::uint8_t>;

/// BT.601 luma, round half up.
std::uint8_t luma(Rgb8 c) noexcept;

GrayImage to_grayscale(const RasterImage& img);

// PNG codec. Reading rejects anything without a PNG signature (ErrorKind::NotPng)
// and converts every PNG color type to 8-bit RGB; alpha is composited on black.
RasterImage read_png(const std::filesystem::path& path);
RasterImage decode_png(const std::vector<std::uint8_t>& data);

// Encoding uses fixed libpng settings, so equal pixels give equal bytes.
std::vector<std::uint8_t> encode_png(const RasterImage& img);
std::vector<std::uint8_t> encode_png(const RgbaImage& img);
void write_png(const std::filesystem::path& path, const RasterImage& img);
void write_png(const std::filesystem::path& path, const RgbaImage& img);

}  // namespace heatfix
