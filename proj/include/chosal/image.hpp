#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chosal {

/// 8-bit RGB image, row-major interleaved triples.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 3 * width * height

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  const std::uint8_t* pixel(int x, int y) const { return &data[(static_cast<std::size_t>(y) * width + x) * 3]; }
  std::uint8_t* pixel(int x, int y) { return &data[(static_cast<std::size_t>(y) * width + x) * 3]; }
};

/// CIELAB image, row-major (L*, a*, b*) triples.
/// L* in [0,100], a*/b* in [-128,128] for any 8-bit sRGB input.
struct LabImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // 3 * width * height

  LabImage() = default;
  LabImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0.0) {}

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  const double* pixel(int x, int y) const { return &data[(static_cast<std::size_t>(y) * width + x) * 3]; }
  std::array<double, 3> lab_at(std::size_t offset) const {
    return {data[offset * 3], data[offset * 3 + 1], data[offset * 3 + 2]};
  }
};

/// 8-bit single-channel grid (saliency export, mask sources).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Per-pixel boolean mask; nonzero = salient.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 0 or 1

  BinaryMask() = default;
  BinaryMask(int w, int h, bool fill = false)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
};

enum class ImageIoStatus {
  FileNotFound,
  UnsupportedDepth,
  UnsupportedFormat,
  DecodeFailed,
  WriteFailed,
};

class ImageIoError : public std::runtime_error {
 public:
  ImageIoError(ImageIoStatus status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  ImageIoStatus status() const { return status_; }

 private:
  ImageIoStatus status_;
};

/// Decode an 8-bit PNG. Grayscale and palette images are promoted to RGB,
/// alpha is stripped. 16-bit files are rejected with UnsupportedDepth.
RgbImage load_image(const std::string& path);

/// Decode a grayscale PNG into a mask: salient iff gray value > 127.
BinaryMask load_mask(const std::string& path);

/// Decode a grayscale PNG into an 8-bit grid (precomputed saliency maps).
GrayImage load_gray(const std::string& path);

/// Write an 8-bit grayscale PNG. Lossless; load_gray round-trips bit-exactly.
void save_gray(const GrayImage& img, const std::string& path);

/// Write an 8-bit RGB PNG (debug dumps).
void save_rgb(const RgbImage& img, const std::string& path);

/// Per-pixel sRGB -> linear RGB -> XYZ (D65) -> CIELAB.
LabImage rgb_to_lab(const RgbImage& img);

/// Single-pixel conversion with the same constants.
std::array<double, 3> srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

}  // namespace chosal
