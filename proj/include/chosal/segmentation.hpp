#pragma once

#include <array>
#include <vector>

#include "chosal/image.hpp"

namespace chosal {

/// Partition of the image into contiguously-numbered regions 0..num_regions-1.
struct Segmentation {
  int width = 0;
  int height = 0;
  std::vector<int> labels;  // row-major
  int num_regions = 0;

  int label_at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

/// Per-region aggregates feeding the graph weights and the contrast cue.
/// Centroid coordinates are pixel centers divided by the image diagonal.
struct RegionStats {
  int id = 0;
  int size = 0;
  std::array<double, 3> mean_lab{0.0, 0.0, 0.0};
  std::array<double, 2> centroid{0.0, 0.0};
  std::vector<int> pixels;  // row-major offsets, ascending
};

/// Graph-based over-segmentation (Felzenszwalb-Huttenlocher) on the
/// Gaussian-smoothed Lab image: 8-connected grid, edge weight = Euclidean
/// Lab distance, merge when weight <= min internal difference + k/|component|,
/// then fold components smaller than min_size into their most-similar
/// neighbor. Ties on equal edge weights break by lexicographic pixel order,
/// so the labeling is identical across runs. Output regions are spatially
/// connected and relabeled contiguously in row-major order of first pixel.
Segmentation felzenszwalb_segment(const LabImage& img, double scale_k, int min_size,
                                  double smooth_sigma);

/// Exact per-region size, mean Lab color, diagonal-normalized centroid, and
/// member pixel offsets. Throws std::invalid_argument on dimension mismatch.
std::vector<RegionStats> region_stats(const Segmentation& seg, const LabImage& img);

}  // namespace chosal
