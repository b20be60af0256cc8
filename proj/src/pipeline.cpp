#include "chosal/pipeline.hpp"

namespace chosal {

PipelineResult compute_saliency_full(const RgbImage& img, const PipelineConfig& config) {
  validate_config(config);

  PipelineResult result;
  result.lab = rgb_to_lab(img);
  result.base = felzenszwalb_segment(result.lab, config.felz_scale_k, config.felz_min_size,
                                     config.felz_smooth_sigma);

  const std::vector<RegionStats> stats = region_stats(result.base, result.lab);
  const WeightedGraph graph = build_region_graph(stats, config.sigma_c2, config.sigma_s2);
  result.hierarchy = build_hierarchy(graph, result.base, stats, config.layer_counts);

  result.cho = cho_map(result.hierarchy, result.base, config.normalize_cues);
  const ContrastConfig contrast{config.sigma_s2, config.sigma_w2};
  result.gc = gc_map(result.hierarchy, result.base, contrast, config.normalize_cues);
  result.fused = fuse(result.cho, result.gc);
  return result;
}

SaliencyMap compute_saliency(const RgbImage& img, const PipelineConfig& config) {
  return compute_saliency_full(img, config).fused;
}

}  // namespace chosal
