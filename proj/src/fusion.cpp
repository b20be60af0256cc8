#include "chosal/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace chosal {

void minmax_normalize(SaliencyMap& map) {
  if (map.values.empty()) return;
  const auto [lo_it, hi_it] = std::minmax_element(map.values.begin(), map.values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi <= lo) {
    std::fill(map.values.begin(), map.values.end(), 0.0);
    return;
  }
  const double inv = 1.0 / (hi - lo);
  for (double& v : map.values) v = (v - lo) * inv;
}

SaliencyMap fuse(const SaliencyMap& cho, const SaliencyMap& gc) {
  if (cho.width != gc.width || cho.height != gc.height) {
    throw std::invalid_argument("fuse: dimension mismatch");
  }
  SaliencyMap out(cho.width, cho.height);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = cho.values[i] * gc.values[i];
  }
  minmax_normalize(out);
  return out;
}

GrayImage to_u8(const SaliencyMap& map) {
  GrayImage out(map.width, map.height);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const double v = std::floor(map.values[i] * 255.0 + 0.5);
    out.data[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return out;
}

namespace {

void put_u32_le(std::ofstream& os, std::uint32_t v) {
  const std::uint8_t bytes[4] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8),
                                 static_cast<std::uint8_t>(v >> 16),
                                 static_cast<std::uint8_t>(v >> 24)};
  os.write(reinterpret_cast<const char*>(bytes), 4);
}

std::uint32_t get_u32_le(std::ifstream& is) {
  std::uint8_t bytes[4];
  is.read(reinterpret_cast<char*>(bytes), 4);
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void write_raw_map(const SaliencyMap& map, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_raw_map: cannot open " + path);
  put_u32_le(os, static_cast<std::uint32_t>(map.width));
  put_u32_le(os, static_cast<std::uint32_t>(map.height));
  for (const double v : map.values) {
    const float f = static_cast<float>(v);
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32_le(os, bits);
  }
  if (!os) throw std::runtime_error("write_raw_map: write failed for " + path);
}

SaliencyMap read_raw_map(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_raw_map: cannot open " + path);
  const std::uint32_t w = get_u32_le(is);
  const std::uint32_t h = get_u32_le(is);
  SaliencyMap map(static_cast<int>(w), static_cast<int>(h));
  for (double& v : map.values) {
    const std::uint32_t bits = get_u32_le(is);
    float f;
    std::memcpy(&f, &bits, 4);
    v = f;
  }
  if (!is) throw std::runtime_error("read_raw_map: truncated file " + path);
  return map;
}

}  // namespace chosal
