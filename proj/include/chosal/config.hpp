#pragma once

#include <string>
#include <vector>

namespace chosal {

/// Every knob of the pipeline in one place. The flat JSON form uses the
/// field names below as keys; reports echo the full config so results are
/// self-describing.
struct PipelineConfig {
  double sigma_c2 = 400.0;  // color falloff in the region-graph weights
  double sigma_s2 = 0.4;    // spatial falloff, shared by graph and contrast cue
  double sigma_w2 = 0.16;   // center-prior falloff of the contrast cue

  std::vector<int> layer_counts = {2, 4, 8, 16, 32};

  double felz_scale_k = 300.0;
  int felz_min_size = 50;
  double felz_smooth_sigma = 0.8;

  double beta2 = 0.3;
  bool normalize_cues = true;
  int workers = 0;  // 0 = hardware concurrency; CHOSAL_WORKERS overrides

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Throws std::invalid_argument when a field is out of range
/// (sigmas/scale_k/beta2 > 0, min_size >= 1, layer_counts strictly
/// increasing and positive).
void validate_config(const PipelineConfig& config);

std::string config_to_json(const PipelineConfig& config);

/// Parses the flat JSON form; unknown keys are rejected, missing keys keep
/// their defaults. Validates before returning.
PipelineConfig config_from_json(const std::string& json_text);

/// config_from_json over a file's contents.
PipelineConfig load_config_file(const std::string& path);

}  // namespace chosal
