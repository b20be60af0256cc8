#pragma once

#include <vector>

namespace chosal {

/// Per-pixel real-valued saliency. Normalized maps live in [0,1].
struct SaliencyMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  SaliencyMap() = default;
  SaliencyMap(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

/// In-place min-max normalization to [0,1]; a constant map becomes all zeros.
void minmax_normalize(SaliencyMap& map);

}  // namespace chosal
