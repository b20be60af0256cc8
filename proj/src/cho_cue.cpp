#include "chosal/cho_cue.hpp"

#include <algorithm>
#include <stdexcept>

#include "chosal/geometry.hpp"

namespace chosal {

LayerChoTable layer_cho(const std::vector<RegionStats>& regions, int width, int height,
                        int layer_index) {
  const std::size_t pixel_total = static_cast<std::size_t>(width) * height;
  const int k = static_cast<int>(regions.size());

  // Label map from the pixel lists; every pixel must be covered exactly once.
  std::vector<int> label(pixel_total, -1);
  std::size_t covered = 0;
  for (int j = 0; j < k; ++j) {
    for (int p : regions[j].pixels) {
      if (p < 0 || static_cast<std::size_t>(p) >= pixel_total || label[p] != -1) {
        throw std::invalid_argument("layer_cho: regions do not partition the image");
      }
      label[p] = j;
      ++covered;
    }
  }
  if (covered != pixel_total) {
    throw std::invalid_argument("layer_cho: regions do not partition the image");
  }

  // Each rasterized hull sweeps the pixels it covers; a pixel of region j
  // inside the hull of region i != j contributes once to CHO(j).
  std::vector<double> overlap(k, 0.0);
  std::vector<Point> centers;
  for (int i = 0; i < k; ++i) {
    centers.clear();
    centers.reserve(regions[i].pixels.size());
    for (int p : regions[i].pixels) {
      centers.push_back({p % width + 0.5, p / width + 0.5});
    }
    const HullPoly hull = convex_hull(centers);
    for (int p : rasterize_hull(hull, width, height)) {
      const int j = label[p];
      if (j != i) overlap[j] += 1.0;
    }
  }

  LayerChoTable table;
  table.layer_index = layer_index;
  table.cho.resize(k);
  for (int j = 0; j < k; ++j) table.cho[j] = overlap[j] / regions[j].size;
  return table;
}

SaliencyMap cho_map(const Hierarchy& hierarchy, const Segmentation& base, bool normalize) {
  const int n = hierarchy.layer_count();
  if (n < 1) throw std::invalid_argument("cho_map: empty hierarchy");

  SaliencyMap map(base.width, base.height);
  for (int i = 0; i < n; ++i) {
    const HierarchyLayer& layer = hierarchy.layers[i];
    const LayerChoTable table = layer_cho(layer.regions, base.width, base.height, i);
    for (std::size_t p = 0; p < map.values.size(); ++p) {
      map.values[p] += table.cho[layer.base_to_region[base.labels[p]]];
    }
  }
  for (double& v : map.values) v /= n;

  if (normalize) minmax_normalize(map);
  return map;
}

}  // namespace chosal
