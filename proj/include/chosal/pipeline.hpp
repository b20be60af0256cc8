#pragma once

#include "chosal/cho_cue.hpp"
#include "chosal/config.hpp"
#include "chosal/contrast_cue.hpp"
#include "chosal/fusion.hpp"
#include "chosal/hierarchy.hpp"
#include "chosal/image.hpp"
#include "chosal/saliency_map.hpp"
#include "chosal/segmentation.hpp"

namespace chosal {

/// Every intermediate the pipeline produces, for debug dumps and ablations.
struct PipelineResult {
  LabImage lab;
  Segmentation base;
  Hierarchy hierarchy;
  SaliencyMap cho;
  SaliencyMap gc;
  SaliencyMap fused;
};

/// Full pipeline: Lab conversion, over-segmentation, region graph, recursive
/// NCut hierarchy, both cues, multiplicative fusion. Deterministic for a
/// fixed config.
PipelineResult compute_saliency_full(const RgbImage& img, const PipelineConfig& config);

/// The fused saliency map only.
SaliencyMap compute_saliency(const RgbImage& img, const PipelineConfig& config);

}  // namespace chosal
