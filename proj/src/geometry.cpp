#include "chosal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chosal {

namespace {

constexpr double kBoundaryEps = 1e-9;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist2(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool lex_less(const Point& a, const Point& b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

}  // namespace

HullPoly convex_hull(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("convex_hull: empty point set");
  }

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  HullPoly hull;
  if (pts.size() == 1) {
    hull.degenerate = true;
    hull.vertices = pts;
    hull.support = pts;
    return hull;
  }

  bool all_collinear = true;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (cross(pts[0], pts[1], pts[i]) != 0.0) {
      all_collinear = false;
      break;
    }
  }
  if (all_collinear) {
    hull.degenerate = true;
    hull.vertices = {pts.front(), pts.back()};
    hull.support = std::move(pts);
    return hull;
  }

  // Graham scan. Pivot is the lowest-y/lowest-x point; the rest are sorted by
  // polar angle around it, nearer points first on ties.
  const Point pivot = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&](const Point& a, const Point& b) {
    const double c = cross(pivot, a, b);
    if (c != 0.0) return c > 0.0;
    return dist2(pivot, a) < dist2(pivot, b);
  });

  std::vector<Point> stack;
  stack.reserve(pts.size());
  for (const Point& p : pts) {
    while (stack.size() >= 2 && cross(stack[stack.size() - 2], stack.back(), p) <= 0.0) {
      stack.pop_back();
    }
    stack.push_back(p);
  }

  hull.vertices = std::move(stack);
  return hull;
}

bool hull_contains(const HullPoly& hull, Point p) {
  if (hull.degenerate) {
    for (const Point& s : hull.support) {
      if (std::abs(s.x - p.x) <= kBoundaryEps && std::abs(s.y - p.y) <= kBoundaryEps) return true;
    }
    return false;
  }
  const std::size_t n = hull.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = hull.vertices[i];
    const Point& b = hull.vertices[(i + 1) % n];
    if (cross(a, b, p) < -kBoundaryEps) return false;
  }
  return true;
}

namespace {

std::vector<int> rasterize_degenerate(const HullPoly& hull, int width, int height) {
  std::vector<int> out;
  for (const Point& s : hull.support) {
    const int col = static_cast<int>(std::llround(s.x - 0.5));
    const int row = static_cast<int>(std::llround(s.y - 0.5));
    if (col < 0 || col >= width || row < 0 || row >= height) continue;
    if (std::abs(col + 0.5 - s.x) <= kBoundaryEps && std::abs(row + 0.5 - s.y) <= kBoundaryEps) {
      out.push_back(row * width + col);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<int> rasterize_hull(const HullPoly& hull, int width, int height) {
  if (hull.degenerate) return rasterize_degenerate(hull, width, height);

  double min_y = hull.vertices[0].y, max_y = min_y;
  for (const Point& v : hull.vertices) {
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }

  std::vector<int> out;
  const int row_lo = std::max(0, static_cast<int>(std::floor(min_y - 0.5)) - 1);
  const int row_hi = std::min(height - 1, static_cast<int>(std::ceil(max_y - 0.5)) + 1);
  const std::size_t n = hull.vertices.size();

  for (int row = row_lo; row <= row_hi; ++row) {
    const double y = row + 0.5;

    // Candidate x-interval from edge crossings; the exact run boundaries are
    // then settled with hull_contains so both agree pixel for pixel.
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = hull.vertices[i];
      const Point& b = hull.vertices[(i + 1) % n];
      if (y < std::min(a.y, b.y) - 0.5 || y > std::max(a.y, b.y) + 0.5) continue;
      double x0, x1;
      if (std::abs(b.y - a.y) <= 1e-12) {
        x0 = a.x;
        x1 = b.x;
      } else {
        double t = (y - a.y) / (b.y - a.y);
        t = std::clamp(t, 0.0, 1.0);
        x0 = x1 = a.x + t * (b.x - a.x);
      }
      if (!any) {
        lo = std::min(x0, x1);
        hi = std::max(x0, x1);
        any = true;
      } else {
        lo = std::min(lo, std::min(x0, x1));
        hi = std::max(hi, std::max(x0, x1));
      }
    }
    if (!any) continue;

    int c_lo = std::max(0, static_cast<int>(std::floor(lo - 0.5)) - 1);
    int c_hi = std::min(width - 1, static_cast<int>(std::ceil(hi - 0.5)) + 1);

    int first = c_lo;
    while (first <= c_hi && !hull_contains(hull, {first + 0.5, y})) ++first;
    if (first > c_hi) continue;
    int last = c_hi;
    while (last > first && !hull_contains(hull, {last + 0.5, y})) --last;

    for (int c = first; c <= last; ++c) out.push_back(row * width + c);
  }
  return out;
}

long long overlap_count(std::span<const int> region_pixels, std::span<const int> hull_pixels) {
  long long count = 0;
  std::size_t i = 0, j = 0;
  while (i < region_pixels.size() && j < hull_pixels.size()) {
    if (region_pixels[i] < hull_pixels[j]) {
      ++i;
    } else if (region_pixels[i] > hull_pixels[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace chosal
