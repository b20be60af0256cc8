#pragma once

#include <vector>

#include "chosal/hierarchy.hpp"
#include "chosal/saliency_map.hpp"
#include "chosal/segmentation.hpp"

namespace chosal {

/// Per-region Convex Hull Overlap scores for one layer. Values are
/// nonnegative and may exceed 1: the score sums the region's pixels covered
/// by every other region's hull, counted once per hull.
struct LayerChoTable {
  int layer_index = 0;
  std::vector<double> cho;
};

/// CHO(R_j) = sum over the other regions' hulls C of |R_j ∩ C| / |R_j|.
/// The regions' pixel lists must partition the width x height grid. Hulls
/// are taken over pixel centers; regions made of disconnected components are
/// hulled as one point set.
LayerChoTable layer_cho(const std::vector<RegionStats>& regions, int width, int height,
                        int layer_index = 0);

/// Pixel-level CHO cue: the arithmetic mean over layers of the containing
/// region's CHO value, min-max normalized to [0,1] unless normalize is off.
SaliencyMap cho_map(const Hierarchy& hierarchy, const Segmentation& base, bool normalize = true);

}  // namespace chosal
