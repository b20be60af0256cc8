#include "chosal/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chosal {

namespace {

// Plain union-find with size tracking; components never shrink.
struct DisjointSet {
  std::vector<int> parent;
  std::vector<int> size;

  explicit DisjointSet(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  int join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return a;
  }
};

struct GridEdge {
  int a;
  int b;
  float weight;
};

// Separable Gaussian with clamped borders; kernel radius 4*sigma.
std::vector<double> gaussian_kernel(double sigma) {
  sigma = std::max(sigma, 0.01);
  const int radius = static_cast<int>(std::ceil(sigma * 4.0));
  std::vector<double> kernel(radius + 1);
  for (int i = 0; i <= radius; ++i) {
    kernel[i] = std::exp(-0.5 * (i / sigma) * (i / sigma));
  }
  double total = kernel[0];
  for (int i = 1; i <= radius; ++i) total += 2.0 * kernel[i];
  for (double& k : kernel) k /= total;
  return kernel;
}

LabImage smooth(const LabImage& img, double sigma) {
  if (sigma <= 0.0) return img;
  const auto kernel = gaussian_kernel(sigma);
  const int radius = static_cast<int>(kernel.size()) - 1;
  const int w = img.width, h = img.height;

  LabImage tmp(w, h), out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        double sum = kernel[0] * img.data[(static_cast<std::size_t>(y) * w + x) * 3 + c];
        for (int i = 1; i <= radius; ++i) {
          const int xl = std::max(x - i, 0);
          const int xr = std::min(x + i, w - 1);
          sum += kernel[i] * (img.data[(static_cast<std::size_t>(y) * w + xl) * 3 + c] +
                              img.data[(static_cast<std::size_t>(y) * w + xr) * 3 + c]);
        }
        tmp.data[(static_cast<std::size_t>(y) * w + x) * 3 + c] = sum;
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        double sum = kernel[0] * tmp.data[(static_cast<std::size_t>(y) * w + x) * 3 + c];
        for (int i = 1; i <= radius; ++i) {
          const int yu = std::max(y - i, 0);
          const int yd = std::min(y + i, h - 1);
          sum += kernel[i] * (tmp.data[(static_cast<std::size_t>(yu) * w + x) * 3 + c] +
                              tmp.data[(static_cast<std::size_t>(yd) * w + x) * 3 + c]);
        }
        out.data[(static_cast<std::size_t>(y) * w + x) * 3 + c] = sum;
      }
    }
  }
  return out;
}

float lab_distance(const LabImage& img, int a, int b) {
  const double dl = img.data[a * 3] - img.data[b * 3];
  const double da = img.data[a * 3 + 1] - img.data[b * 3 + 1];
  const double db = img.data[a * 3 + 2] - img.data[b * 3 + 2];
  return static_cast<float>(std::sqrt(dl * dl + da * da + db * db));
}

}  // namespace

Segmentation felzenszwalb_segment(const LabImage& img, double scale_k, int min_size,
                                  double smooth_sigma) {
  const int w = img.width, h = img.height;
  const int n = w * h;
  const LabImage smoothed = smooth(img, smooth_sigma);

  // Edges in lexicographic pixel order (E, S, SE, SW per pixel); the stable
  // sort then breaks weight ties by that order.
  std::vector<GridEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * 4);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int p = y * w + x;
      if (x + 1 < w) edges.push_back({p, p + 1, lab_distance(smoothed, p, p + 1)});
      if (y + 1 < h) edges.push_back({p, p + w, lab_distance(smoothed, p, p + w)});
      if (x + 1 < w && y + 1 < h) edges.push_back({p, p + w + 1, lab_distance(smoothed, p, p + w + 1)});
      if (x - 1 >= 0 && y + 1 < h) edges.push_back({p, p + w - 1, lab_distance(smoothed, p, p + w - 1)});
    }
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const GridEdge& a, const GridEdge& b) { return a.weight < b.weight; });

  DisjointSet ds(n);
  std::vector<double> threshold(n, scale_k);  // Int(C) + k/|C|, indexed by root
  for (const GridEdge& e : edges) {
    const int ra = ds.find(e.a);
    const int rb = ds.find(e.b);
    if (ra == rb) continue;
    if (e.weight <= threshold[ra] && e.weight <= threshold[rb]) {
      const int r = ds.join(ra, rb);
      threshold[r] = e.weight + scale_k / ds.size[r];
    }
  }

  // Fold undersized components along ascending edge weights: the first edge
  // leaving a small component reaches its most-similar neighbor.
  for (const GridEdge& e : edges) {
    const int ra = ds.find(e.a);
    const int rb = ds.find(e.b);
    if (ra == rb) continue;
    if (ds.size[ra] < min_size || ds.size[rb] < min_size) ds.join(ra, rb);
  }

  Segmentation seg;
  seg.width = w;
  seg.height = h;
  seg.labels.assign(n, -1);
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    const int r = ds.find(p);
    if (root_label[r] < 0) root_label[r] = next++;
    seg.labels[p] = root_label[r];
  }
  seg.num_regions = next;
  return seg;
}

std::vector<RegionStats> region_stats(const Segmentation& seg, const LabImage& img) {
  if (seg.width != img.width || seg.height != img.height) {
    throw std::invalid_argument("region_stats: segmentation/image dimension mismatch");
  }
  const int w = seg.width, h = seg.height;
  const double diag = std::sqrt(static_cast<double>(w) * w + static_cast<double>(h) * h);

  std::vector<RegionStats> stats(seg.num_regions);
  for (int i = 0; i < seg.num_regions; ++i) stats[i].id = i;

  std::vector<std::array<double, 3>> color_sum(seg.num_regions, {0.0, 0.0, 0.0});
  std::vector<std::array<double, 2>> pos_sum(seg.num_regions, {0.0, 0.0});
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int p = y * w + x;
      const int r = seg.labels[p];
      stats[r].size += 1;
      stats[r].pixels.push_back(p);
      color_sum[r][0] += img.data[p * 3];
      color_sum[r][1] += img.data[p * 3 + 1];
      color_sum[r][2] += img.data[p * 3 + 2];
      pos_sum[r][0] += x + 0.5;
      pos_sum[r][1] += y + 0.5;
    }
  }
  for (int r = 0; r < seg.num_regions; ++r) {
    const double inv = 1.0 / stats[r].size;
    stats[r].mean_lab = {color_sum[r][0] * inv, color_sum[r][1] * inv, color_sum[r][2] * inv};
    stats[r].centroid = {pos_sum[r][0] * inv / diag, pos_sum[r][1] * inv / diag};
  }
  return stats;
}

}  // namespace chosal
