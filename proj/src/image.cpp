#include "chosal/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

namespace chosal {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

// Decodes any supported PNG to packed 8-bit RGB rows.
RgbImage decode_png_rgb(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) {
    throw ImageIoError(ImageIoStatus::FileNotFound, "file not found: " + path);
  }

  png_byte signature[8];
  if (std::fread(signature, 1, 8, file.get()) != 8 || png_sig_cmp(signature, 0, 8) != 0) {
    throw ImageIoError(ImageIoStatus::UnsupportedFormat, "not a PNG file: " + path);
  }

  PngReader reader;
  reader.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!reader.png) throw ImageIoError(ImageIoStatus::DecodeFailed, "libpng init failed");
  reader.info = png_create_info_struct(reader.png);
  if (!reader.info) throw ImageIoError(ImageIoStatus::DecodeFailed, "libpng init failed");

  if (setjmp(png_jmpbuf(reader.png))) {
    throw ImageIoError(ImageIoStatus::DecodeFailed, "PNG decode failed: " + path);
  }

  png_init_io(reader.png, file.get());
  png_set_sig_bytes(reader.png, 8);
  png_read_info(reader.png, reader.info);

  const png_uint_32 width = png_get_image_width(reader.png, reader.info);
  const png_uint_32 height = png_get_image_height(reader.png, reader.info);
  const int bit_depth = png_get_bit_depth(reader.png, reader.info);
  const int color_type = png_get_color_type(reader.png, reader.info);

  if (bit_depth == 16) {
    throw ImageIoError(ImageIoStatus::UnsupportedDepth, "unsupported depth (16-bit): " + path);
  }

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(reader.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(reader.png);
  if (png_get_valid(reader.png, reader.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(reader.png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(reader.png);
  }
  png_set_strip_alpha(reader.png);
  png_set_interlace_handling(reader.png);
  png_read_update_info(reader.png, reader.info);

  if (png_get_channels(reader.png, reader.info) != 3 ||
      png_get_bit_depth(reader.png, reader.info) != 8) {
    throw ImageIoError(ImageIoStatus::UnsupportedFormat, "unsupported PNG layout: " + path);
  }

  RgbImage img(static_cast<int>(width), static_cast<int>(height));
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = img.data.data() + static_cast<std::size_t>(y) * width * 3;
  }
  png_read_image(reader.png, rows.data());
  png_read_end(reader.png, nullptr);
  return img;
}

void encode_png(const std::string& path, int width, int height, int color_type,
                const std::uint8_t* data, std::size_t stride) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) {
    throw ImageIoError(ImageIoStatus::WriteFailed, "cannot open for writing: " + path);
  }

  PngWriter writer;
  writer.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!writer.png) throw ImageIoError(ImageIoStatus::WriteFailed, "libpng init failed");
  writer.info = png_create_info_struct(writer.png);
  if (!writer.info) throw ImageIoError(ImageIoStatus::WriteFailed, "libpng init failed");

  if (setjmp(png_jmpbuf(writer.png))) {
    throw ImageIoError(ImageIoStatus::WriteFailed, "PNG write failed: " + path);
  }

  png_init_io(writer.png, file.get());
  png_set_IHDR(writer.png, writer.info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(writer.png, writer.info);
  for (int y = 0; y < height; ++y) {
    png_write_row(writer.png, const_cast<png_bytep>(data + static_cast<std::size_t>(y) * stride));
  }
  png_write_end(writer.png, nullptr);
}

// sRGB electro-optical transfer, tabulated for the 256 code values.
const std::array<double, 256>& srgb_linear_table() {
  static const std::array<double, 256> table = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
      const double c = i / 255.0;
      t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return t;
  }();
  return table;
}

double lab_f(double t) {
  constexpr double kDelta = 6.0 / 29.0;
  constexpr double kDelta3 = kDelta * kDelta * kDelta;
  return t > kDelta3 ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

}  // namespace

RgbImage load_image(const std::string& path) { return decode_png_rgb(path); }

BinaryMask load_mask(const std::string& path) {
  const RgbImage rgb = decode_png_rgb(path);
  BinaryMask mask(rgb.width, rgb.height);
  for (std::size_t i = 0; i < mask.data.size(); ++i) {
    mask.data[i] = rgb.data[i * 3] > 127 ? 1 : 0;
  }
  return mask;
}

GrayImage load_gray(const std::string& path) {
  const RgbImage rgb = decode_png_rgb(path);
  GrayImage gray(rgb.width, rgb.height);
  for (std::size_t i = 0; i < gray.data.size(); ++i) {
    gray.data[i] = rgb.data[i * 3];
  }
  return gray;
}

void save_gray(const GrayImage& img, const std::string& path) {
  encode_png(path, img.width, img.height, PNG_COLOR_TYPE_GRAY, img.data.data(),
             static_cast<std::size_t>(img.width));
}

void save_rgb(const RgbImage& img, const std::string& path) {
  encode_png(path, img.width, img.height, PNG_COLOR_TYPE_RGB, img.data.data(),
             static_cast<std::size_t>(img.width) * 3);
}

std::array<double, 3> srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const auto& lin = srgb_linear_table();
  const double rl = lin[r], gl = lin[g], bl = lin[b];

  // sRGB primaries, D65 white point.
  const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
  const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
  const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;

  const double fx = lab_f(x / 0.95047);
  const double fy = lab_f(y / 1.0);
  const double fz = lab_f(z / 1.08883);

  return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

LabImage rgb_to_lab(const RgbImage& img) {
  LabImage out(img.width, img.height);
  const std::size_t n = img.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const auto lab = srgb_to_lab(img.data[i * 3], img.data[i * 3 + 1], img.data[i * 3 + 2]);
    out.data[i * 3] = lab[0];
    out.data[i * 3 + 1] = lab[1];
    out.data[i * 3 + 2] = lab[2];
  }
  return out;
}

}  // namespace chosal
