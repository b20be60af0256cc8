#include "chosal/contrast_cue.hpp"

#include <cmath>
#include <stdexcept>

namespace chosal {

double spatial_weight(const RegionStats& region, int width, int height, double sigma_w2) {
  const double diag = std::sqrt(static_cast<double>(width) * width +
                                static_cast<double>(height) * height);
  const double cx = 0.5 * width / diag;
  const double cy = 0.5 * height / diag;
  const double dx = region.centroid[0] - cx;
  const double dy = region.centroid[1] - cy;
  return std::exp(-(dx * dx + dy * dy) / sigma_w2);
}

std::vector<double> layer_gc(const std::vector<RegionStats>& regions, const ContrastConfig& cfg,
                             int width, int height) {
  const int k = static_cast<int>(regions.size());
  std::vector<double> gc(k, 0.0);
  for (int j = 0; j < k; ++j) {
    double sum = 0.0;
    for (int r = 0; r < k; ++r) {
      if (r == j) continue;
      const double dl = regions[j].mean_lab[0] - regions[r].mean_lab[0];
      const double da = regions[j].mean_lab[1] - regions[r].mean_lab[1];
      const double db = regions[j].mean_lab[2] - regions[r].mean_lab[2];
      const double dc = std::sqrt(dl * dl + da * da + db * db);
      const double dx = regions[j].centroid[0] - regions[r].centroid[0];
      const double dy = regions[j].centroid[1] - regions[r].centroid[1];
      const double ds = std::sqrt(dx * dx + dy * dy);
      sum += std::exp(-ds / cfg.sigma_s2) * dc;
    }
    gc[j] = spatial_weight(regions[j], width, height, cfg.sigma_w2) * sum;
  }
  return gc;
}

SaliencyMap gc_map(const Hierarchy& hierarchy, const Segmentation& base, const ContrastConfig& cfg,
                   bool normalize) {
  const int n = hierarchy.layer_count();
  if (n < 1) throw std::invalid_argument("gc_map: empty hierarchy");

  SaliencyMap map(base.width, base.height);
  for (int i = 0; i < n; ++i) {
    const HierarchyLayer& layer = hierarchy.layers[i];
    const std::vector<double> gc = layer_gc(layer.regions, cfg, base.width, base.height);
    for (std::size_t p = 0; p < map.values.size(); ++p) {
      map.values[p] += gc[layer.base_to_region[base.labels[p]]];
    }
  }
  for (double& v : map.values) v /= n;

  if (normalize) minmax_normalize(map);
  return map;
}

}  // namespace chosal
