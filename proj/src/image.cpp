#include "heatfix/image.hpp"

#include <png.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "heatfix/error.hpp"

namespace heatfix {

RasterImage::RasterImage(std::size_t width, std::size_t height, Rgb8 fill)
    : width_(width), height_(height), bytes_(width * height * 3) {
  for (std::size_t i = 0; i < width * height; ++i) {
    bytes_[3 * i] = fill.r;
    bytes_[3 * i + 1] = fill.g;
    bytes_[3 * i + 2] = fill.b;
  }
}

Rgb8 RasterImage::at(std::size_t x, std::size_t y) const {
  const std::size_t i = 3 * (y * width_ + x);
  return {bytes_[i], bytes_[i + 1], bytes_[i + 2]};
}

void RasterImage::set(std::size_t x, std::size_t y, Rgb8 c) {
  const std::size_t i = 3 * (y * width_ + x);
  bytes_[i] = c.r;
  bytes_[i + 1] = c.g;
  bytes_[i + 2] = c.b;
}

RgbaImage::RgbaImage(std::size_t width, std::size_t height, Rgba8 fill)
    : width_(width), height_(height), bytes_(width * height * 4) {
  for (std::size_t i = 0; i < width * height; ++i) {
    bytes_[4 * i] = fill.r;
    bytes_[4 * i + 1] = fill.g;
    bytes_[4 * i + 2] = fill.b;
    bytes_[4 * i + 3] = fill.a;
  }
}

Rgba8 RgbaImage::at(std::size_t x, std::size_t y) const {
  const std::size_t i = 4 * (y * width_ + x);
  return {bytes_[i], bytes_[i + 1], bytes_[i + 2], bytes_[i + 3]};
}

void RgbaImage::set(std::size_t x, std::size_t y, Rgba8 c) {
  const std::size_t i = 4 * (y * width_ + x);
  bytes_[i] = c.r;
  bytes_[i + 1] = c.g;
  bytes_[i + 2] = c.b;
  bytes_[i + 3] = c.a;
}

std::uint8_t luma(Rgb8 c) noexcept {
  // Integer form of 0.299 R + 0.587 G + 0.114 B with round half up.
  const int scaled = 299 * c.r + 587 * c.g + 114 * c.b;
  const int level = (scaled + 500) / 1000;
  return static_cast<std::uint8_t>(level > 255 ? 255 : level);
}

GrayImage to_grayscale(const RasterImage& img) {
  GrayImage gray(img.width(), img.height());
  for (std::size_t y = 0; y < img.height(); ++y)
    for (std::size_t x = 0; x < img.width(); ++x) gray(x, y) = luma(img.at(x, y));
  return gray;
}

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

std::vector<std::uint8_t> encode(const std::uint8_t* pixels, std::size_t width,
                                 std::size_t height, png_uint_32 format) {
  if (width == 0 || height == 0) throw Error(ErrorKind::InvalidArgument, "cannot encode empty image");
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = format;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, pixels, 0, nullptr))
    throw Error(ErrorKind::Io, std::string("png encode failed: ") + image.message);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, pixels, 0, nullptr))
    throw Error(ErrorKind::Io, std::string("png encode failed: ") + image.message);
  out.resize(size);
  return out;
}

}  // namespace

RasterImage decode_png(const std::vector<std::uint8_t>& data) {
  if (data.size() < 8 || png_sig_cmp(data.data(), 0, 8) != 0)
    throw Error(ErrorKind::NotPng, "input is not a PNG image (lossless PNG required)");

  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, data.data(), data.size()))
    throw Error(ErrorKind::BadImage, std::string("png decode failed: ") + image.message);

  image.format = PNG_FORMAT_RGB;
  RasterImage img(image.width, image.height);
  if (img.width() == 0 || img.height() == 0) {
    png_image_free(&image);
    throw Error(ErrorKind::BadImage, "png has zero size");
  }
  const png_color black{0, 0, 0};
  if (!png_image_finish_read(&image, &black, img.bytes().data(), 0, nullptr))
    throw Error(ErrorKind::BadImage, std::string("png decode failed: ") + image.message);
  return img;
}

RasterImage read_png(const std::filesystem::path& path) {
  try {
    return decode_png(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
  return encode(img.bytes().data(), img.width(), img.height(), PNG_FORMAT_RGB);
}

std::vector<std::uint8_t> encode_png(const RgbaImage& img) {
  return encode(img.bytes().data(), img.width(), img.height(), PNG_FORMAT_RGBA);
}

void write_png(const std::filesystem::path& path, const RasterImage& img) {
  write_file(path, encode_png(img));
}

void write_png(const std::filesystem::path& path, const RgbaImage& img) {
  write_file(path, encode_png(img));
}

}  // namespace heatfix
