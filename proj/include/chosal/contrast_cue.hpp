#pragma once

#include <vector>

#include "chosal/hierarchy.hpp"
#include "chosal/saliency_map.hpp"
#include "chosal/segmentation.hpp"

namespace chosal {

struct ContrastConfig {
  double sigma_s2 = 0.4;   // spatial falloff between regions
  double sigma_w2 = 0.16;  // center-prior falloff
};

/// Gaussian center prior: exp(-d^2/sigma_w2) with d the distance from the
/// region centroid to the image center, both diagonal-normalized.
double spatial_weight(const RegionStats& region, int width, int height, double sigma_w2);

/// GC(R_j) = w_s(R_j) * sum over other regions of
/// exp(-Ds(R_j,R_k)/sigma_s2) * Dc(R_j,R_k), with Dc/Ds as in the region
/// graph weights.
std::vector<double> layer_gc(const std::vector<RegionStats>& regions, const ContrastConfig& cfg,
                             int width, int height);

/// Pixel-level contrast cue: mean over layers of the containing region's GC,
/// min-max normalized unless normalize is off.
SaliencyMap gc_map(const Hierarchy& hierarchy, const Segmentation& base, const ContrastConfig& cfg,
                   bool normalize = true);

}  // namespace chosal
