#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chosal/image.hpp"
#include "chosal/segmentation.hpp"

namespace chosal::testing {

inline RgbImage make_rgb(int width, int height,
                         const std::function<std::array<std::uint8_t, 3>(int, int)>& at) {
  RgbImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const auto c = at(x, y);
      const std::size_t p = (static_cast<std::size_t>(y) * width + x) * 3;
      img.data[p] = c[0];
      img.data[p + 1] = c[1];
      img.data[p + 2] = c[2];
    }
  }
  return img;
}

inline RgbImage solid_rgb(int width, int height, std::array<std::uint8_t, 3> color) {
  return make_rgb(width, height, [&](int, int) { return color; });
}

inline Segmentation segmentation_from_labels(int width, int height, std::vector<int> labels) {
  Segmentation seg;
  seg.width = width;
  seg.height = height;
  seg.labels = std::move(labels);
  int max_label = -1;
  for (int v : seg.labels) max_label = std::max(max_label, v);
  seg.num_regions = max_label + 1;
  return seg;
}

/// Random labeling where every region id 0..num_regions-1 appears.
inline std::vector<int> random_labels(int width, int height, int num_regions, std::mt19937& rng) {
  std::vector<int> labels(static_cast<std::size_t>(width) * height);
  std::uniform_int_distribution<int> pick(0, num_regions - 1);
  for (int& v : labels) v = pick(rng);
  for (int r = 0; r < num_regions; ++r) labels[r % labels.size()] = r;
  return labels;
}

class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    std::mt19937_64 rng(std::random_device{}());
    path_ = base / ("chosal_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace chosal::testing
