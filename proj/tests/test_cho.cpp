#include <doctest.h>

#include <random>
#include <vector>

#include "chosal/cho_cue.hpp"
#include "chosal/geometry.hpp"
#include "helpers.hpp"

using namespace chosal;
using chosal::testing::segmentation_from_labels;

namespace {

std::vector<RegionStats> stats_from_labels(const std::vector<int>& labels, int w, int h) {
  const Segmentation seg = segmentation_from_labels(w, h, labels);
  return region_stats(seg, LabImage(w, h));
}

// Per-pixel oracle: count each region's pixels inside every other hull.
std::vector<double> brute_cho(const std::vector<int>& labels, int w, int h, int regions) {
  std::vector<HullPoly> hulls(regions);
  for (int r = 0; r < regions; ++r) {
    std::vector<Point> centers;
    for (int p = 0; p < w * h; ++p) {
      if (labels[p] == r) centers.push_back({p % w + 0.5, p / w + 0.5});
    }
    hulls[r] = convex_hull(centers);
  }
  std::vector<double> cho(regions, 0.0);
  for (int r = 0; r < regions; ++r) {
    long long inside = 0, size = 0;
    for (int p = 0; p < w * h; ++p) {
      if (labels[p] != r) continue;
      ++size;
      const Point center{p % w + 0.5, p / w + 0.5};
      for (int other = 0; other < regions; ++other) {
        if (other != r && hull_contains(hulls[other], center)) ++inside;
      }
    }
    cho[r] = static_cast<double>(inside) / static_cast<double>(size);
  }
  return cho;
}

std::vector<int> square_in_frame_labels(int side, int inner, int& w, int& h) {
  w = h = side;
  const int lo = (side - inner) / 2, hi = lo + inner;
  std::vector<int> labels(static_cast<std::size_t>(side) * side, 1);
  for (int y = lo; y < hi; ++y) {
    for (int x = lo; x < hi; ++x) labels[y * side + x] = 0;
  }
  return labels;
}

}  // namespace

TEST_CASE("single region has cho zero") {
  const std::vector<int> labels(6 * 4, 0);
  const LayerChoTable table = layer_cho(stats_from_labels(labels, 6, 4), 6, 4);
  REQUIRE(table.cho.size() == 1);
  CHECK(table.cho[0] == 0.0);
}

TEST_CASE("two side-by-side rectangles have cho zero") {
  std::vector<int> labels(20 * 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 20; ++x) labels[y * 20 + x] = x < 10 ? 0 : 1;
  }
  const LayerChoTable table = layer_cho(stats_from_labels(labels, 20, 8), 20, 8);
  REQUIRE(table.cho.size() == 2);
  CHECK(table.cho[0] == 0.0);
  CHECK(table.cho[1] == 0.0);
}

TEST_CASE("square in frame: square 1, frame 0") {
  int w = 0, h = 0;
  const std::vector<int> labels = square_in_frame_labels(64, 16, w, h);
  const LayerChoTable table = layer_cho(stats_from_labels(labels, w, h), w, h);
  REQUIRE(table.cho.size() == 2);
  CHECK(table.cho[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(table.cho[1] == doctest::Approx(0.0).epsilon(1e-12));

  const std::vector<double> oracle = brute_cho(labels, w, h, 2);
  CHECK(table.cho[0] == doctest::Approx(oracle[0]).epsilon(1e-12));
  CHECK(table.cho[1] == doctest::Approx(oracle[1]).epsilon(1e-12));
}

TEST_CASE("random label maps match the per-pixel oracle") {
  std::mt19937 rng(911);
  for (int iter = 0; iter < 50; ++iter) {
    const int w = 8 + static_cast<int>(rng() % 57);
    const int h = 8 + static_cast<int>(rng() % 57);
    const int regions = 2 + static_cast<int>(rng() % 5);
    const std::vector<int> labels = chosal::testing::random_labels(w, h, regions, rng);

    const LayerChoTable table = layer_cho(stats_from_labels(labels, w, h), w, h);
    const std::vector<double> oracle = brute_cho(labels, w, h, regions);
    REQUIRE(table.cho.size() == oracle.size());
    for (std::size_t r = 0; r < oracle.size(); ++r) {
      CHECK(table.cho[r] == doctest::Approx(oracle[r]).epsilon(1e-12));
    }
  }
}

TEST_CASE("layer_cho rejects a non-partition") {
  std::vector<RegionStats> stats = stats_from_labels(std::vector<int>(4 * 4, 0), 4, 4);
  stats[0].pixels.pop_back();
  stats[0].size -= 1;
  CHECK_THROWS_AS(layer_cho(stats, 4, 4), std::invalid_argument);
}

TEST_CASE("cho map averages layers and normalizes") {
  // Base: 4 quadrant regions on a 16x16 grid. Two layers: the quadrants
  // themselves, and a coarse left/right split.
  const int w = 16, h = 16;
  std::vector<int> base_labels(w * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      base_labels[y * w + x] = (y < h / 2 ? 0 : 2) + (x < w / 2 ? 0 : 1);
    }
  }
  const Segmentation base = segmentation_from_labels(w, h, base_labels);
  const std::vector<RegionStats> base_stats = region_stats(base, LabImage(w, h));

  Hierarchy hierarchy;
  HierarchyLayer coarse;
  coarse.base_to_region = {0, 1, 0, 1};
  HierarchyLayer fine;
  fine.base_to_region = {0, 1, 2, 3};
  auto merge = [&](const HierarchyLayer& layer, int count) {
    HierarchyLayer out = layer;
    out.regions.assign(count, RegionStats{});
    for (int r = 0; r < count; ++r) out.regions[r].id = r;
    for (int b = 0; b < 4; ++b) {
      RegionStats& dst = out.regions[layer.base_to_region[b]];
      dst.size += base_stats[b].size;
      dst.pixels.insert(dst.pixels.end(), base_stats[b].pixels.begin(),
                        base_stats[b].pixels.end());
    }
    for (RegionStats& r : out.regions) std::sort(r.pixels.begin(), r.pixels.end());
    return out;
  };
  hierarchy.layers.push_back(merge(coarse, 2));
  hierarchy.layers.push_back(merge(fine, 4));

  // Both layers tile the grid with rectangles, so every per-region CHO is 0
  // and the raw map is constant; normalization sends it to all-zero.
  const SaliencyMap normalized = cho_map(hierarchy, base, true);
  for (double v : normalized.values) CHECK(v == 0.0);

  // Raw (unnormalized) map equals the mean of the per-layer tables.
  const SaliencyMap raw = cho_map(hierarchy, base, false);
  const LayerChoTable t0 = layer_cho(hierarchy.layers[0].regions, w, h, 0);
  const LayerChoTable t1 = layer_cho(hierarchy.layers[1].regions, w, h, 1);
  for (int p = 0; p < w * h; ++p) {
    const double expect = 0.5 * (t0.cho[coarse.base_to_region[base_labels[p]]] +
                                 t1.cho[fine.base_to_region[base_labels[p]]]);
    CHECK(raw.values[p] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("square-in-frame map: 1 on the square, 0 on the frame") {
  int w = 0, h = 0;
  const std::vector<int> labels = square_in_frame_labels(64, 16, w, h);
  const Segmentation base = segmentation_from_labels(w, h, labels);

  Hierarchy hierarchy;
  HierarchyLayer layer;
  layer.base_to_region = {0, 1};
  layer.regions = region_stats(base, LabImage(w, h));
  hierarchy.layers.push_back(layer);

  const SaliencyMap map = cho_map(hierarchy, base, true);
  for (int p = 0; p < w * h; ++p) {
    CHECK(map.values[p] == doctest::Approx(labels[p] == 0 ? 1.0 : 0.0).epsilon(1e-12));
  }
}
