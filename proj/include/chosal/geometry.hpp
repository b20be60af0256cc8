#pragma once

#include <span>
#include <vector>

namespace chosal {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Convex polygon of a point set. Vertices are counter-clockwise with no
/// three consecutive collinear. Sets with fewer than three distinct
/// non-collinear points carry the degenerate flag; `vertices` then holds the
/// extreme points and `support` every distinct generating point, which is
/// exactly what such a hull contains.
struct HullPoly {
  std::vector<Point> vertices;
  bool degenerate = false;
  std::vector<Point> support;
};

/// Graham scan: lowest-y (then lowest-x) pivot, angular sort, collinear
/// boundary points removed. Throws std::invalid_argument on empty input.
HullPoly convex_hull(std::span<const Point> points);

/// Inside-or-on-boundary test; half-plane slack 1e-9. Degenerate hulls
/// contain exactly their generating points.
bool hull_contains(const HullPoly& hull, Point p);

/// Pixels (row-major offsets, sorted) whose centers (col+0.5, row+0.5) pass
/// hull_contains. Scanline intervals with the boundary pixels settled by the
/// pointwise predicate itself, so the result matches it exactly.
std::vector<int> rasterize_hull(const HullPoly& hull, int width, int height);

/// |intersection| of two sorted offset sets.
long long overlap_count(std::span<const int> region_pixels, std::span<const int> hull_pixels);

}  // namespace chosal
