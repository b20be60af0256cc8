#include "chosal/hierarchy.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chosal {

double edge_weight(const RegionStats& a, const RegionStats& b, double sigma_c2, double sigma_s2) {
  const double dl = a.mean_lab[0] - b.mean_lab[0];
  const double da = a.mean_lab[1] - b.mean_lab[1];
  const double db = a.mean_lab[2] - b.mean_lab[2];
  const double dc = std::sqrt(dl * dl + da * da + db * db);

  const double dx = a.centroid[0] - b.centroid[0];
  const double dy = a.centroid[1] - b.centroid[1];
  const double ds = std::sqrt(dx * dx + dy * dy);

  const double w = static_cast<double>(a.size) * b.size * std::exp(-dc / sigma_c2) *
                   std::exp(-ds / sigma_s2);
  return w < 1e-300 ? 0.0 : w;
}

WeightedGraph build_region_graph(const std::vector<RegionStats>& stats, double sigma_c2,
                                 double sigma_s2) {
  const int m = static_cast<int>(stats.size());
  WeightedGraph g;
  g.sigma_c2 = sigma_c2;
  g.sigma_s2 = sigma_s2;
  g.weights = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double w = edge_weight(stats[i], stats[j], sigma_c2, sigma_s2);
      g.weights(i, j) = w;
      g.weights(j, i) = w;
    }
  }
  return g;
}

double ncut_value(const WeightedGraph& graph, const std::vector<int>& part_a,
                  const std::vector<int>& part_b) {
  double cut = 0.0, assoc_a = 0.0, assoc_b = 0.0;
  for (int i : part_a) {
    for (int j : part_b) cut += graph.weights(i, j);
    for (int j : part_a) assoc_a += graph.weights(i, j);
  }
  for (int i : part_b) {
    for (int j : part_b) assoc_b += graph.weights(i, j);
  }
  assoc_a += cut;  // assoc(A,V) = assoc(A,A) + cut(A,B)
  assoc_b += cut;
  const double term_a = assoc_a > 0.0 ? cut / assoc_a : 0.0;
  const double term_b = assoc_b > 0.0 ? cut / assoc_b : 0.0;
  return term_a + term_b;
}

namespace {

NcutSplit parity_split(const std::vector<int>& members) {
  NcutSplit split;
  for (std::size_t i = 0; i < members.size(); ++i) {
    (i % 2 == 0 ? split.part_a : split.part_b).push_back(members[i]);
  }
  split.ncut_value = 2.0;
  return split;
}

}  // namespace

NcutSplit ncut_bipartition(const WeightedGraph& graph, const std::vector<int>& members) {
  const int n = static_cast<int>(members.size());
  if (n < 2) throw std::invalid_argument("ncut_bipartition: need at least 2 members");

  std::vector<int> sorted_members = members;
  std::sort(sorted_members.begin(), sorted_members.end());

  Eigen::MatrixXd w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = graph.weights(sorted_members[i], sorted_members[j]);
  }

  const Eigen::VectorXd degree = w.rowwise().sum();
  if (degree.sum() <= 0.0) return parity_split(sorted_members);

  // L_sym = I - D^-1/2 W D^-1/2; zero-degree nodes take a zero scale
  // (pseudo-inverse convention).
  Eigen::VectorXd inv_sqrt(n);
  for (int i = 0; i < n; ++i) inv_sqrt(i) = degree(i) > 0.0 ? 1.0 / std::sqrt(degree(i)) : 0.0;
  Eigen::MatrixXd l_sym = -(inv_sqrt.asDiagonal() * w * inv_sqrt.asDiagonal());
  for (int i = 0; i < n; ++i) l_sym(i, i) += 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l_sym);
  // Eigenvalues come back ascending; take the second-smallest and map back to
  // the generalized problem with y = D^-1/2 z.
  const Eigen::VectorXd z = solver.eigenvectors().col(1);
  Eigen::VectorXd y = inv_sqrt.asDiagonal() * z;

  std::vector<double> values(y.data(), y.data() + n);
  std::vector<double> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<double> thresholds;
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    thresholds.push_back(0.5 * (distinct[i - 1] + distinct[i]));
  }
  thresholds.push_back(0.0);

  NcutSplit best;
  best.ncut_value = std::numeric_limits<double>::infinity();
  std::vector<int> part_a, part_b;
  for (const double t : thresholds) {
    part_a.clear();
    part_b.clear();
    for (int i = 0; i < n; ++i) {
      (values[i] <= t ? part_a : part_b).push_back(sorted_members[i]);
    }
    if (part_a.empty() || part_b.empty()) continue;
    const double value = ncut_value(graph, part_a, part_b);
    if (value < best.ncut_value) {
      best.ncut_value = value;
      best.part_a = part_a;
      best.part_b = part_b;
    }
  }

  if (best.part_a.empty()) {
    // Constant eigenvector leaves no valid threshold; fall back to parity.
    best = parity_split(sorted_members);
    best.ncut_value = ncut_value(graph, best.part_a, best.part_b);
  }

  best.eigenvector = y;
  best.eigenvalue = solver.eigenvalues()(1);
  return best;
}

namespace {

struct Cluster {
  std::vector<int> members;  // base region ids, ascending
  NcutSplit split;
  bool splittable = false;
};

Cluster make_cluster(const WeightedGraph& graph, std::vector<int> members) {
  Cluster c;
  c.members = std::move(members);
  if (c.members.size() >= 2) {
    c.split = ncut_bipartition(graph, c.members);
    c.splittable = true;
  }
  return c;
}

RegionStats merge_stats(const std::vector<RegionStats>& base, const std::vector<int>& members,
                        int id) {
  RegionStats out;
  out.id = id;
  double color[3] = {0.0, 0.0, 0.0};
  double pos[2] = {0.0, 0.0};
  for (int b : members) {
    const RegionStats& s = base[b];
    out.size += s.size;
    for (int c = 0; c < 3; ++c) color[c] += s.mean_lab[c] * s.size;
    pos[0] += s.centroid[0] * s.size;
    pos[1] += s.centroid[1] * s.size;
    out.pixels.insert(out.pixels.end(), s.pixels.begin(), s.pixels.end());
  }
  const double inv = 1.0 / out.size;
  out.mean_lab = {color[0] * inv, color[1] * inv, color[2] * inv};
  out.centroid = {pos[0] * inv, pos[1] * inv};
  std::sort(out.pixels.begin(), out.pixels.end());
  return out;
}

HierarchyLayer snapshot_layer(const std::vector<Cluster>& clusters,
                              const std::vector<RegionStats>& stats, int base_count) {
  // Number layer regions by ascending smallest member id.
  std::vector<int> order(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return clusters[a].members.front() < clusters[b].members.front(); });

  HierarchyLayer layer;
  layer.base_to_region.assign(base_count, -1);
  layer.regions.reserve(clusters.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const Cluster& c = clusters[order[rank]];
    for (int b : c.members) layer.base_to_region[b] = static_cast<int>(rank);
    layer.regions.push_back(merge_stats(stats, c.members, static_cast<int>(rank)));
  }
  return layer;
}

}  // namespace

Hierarchy build_hierarchy(const WeightedGraph& graph, const Segmentation& base,
                          const std::vector<RegionStats>& stats,
                          const std::vector<int>& layer_counts) {
  const int m = static_cast<int>(stats.size());
  if (graph.size() != m) throw std::invalid_argument("build_hierarchy: graph/stats size mismatch");
  if (base.num_regions != m) throw std::invalid_argument("build_hierarchy: base/stats size mismatch");
  if (layer_counts.empty()) throw std::invalid_argument("build_hierarchy: no layer counts");

  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;

  std::vector<Cluster> clusters;
  clusters.push_back(make_cluster(graph, std::move(all)));

  Hierarchy hierarchy;
  for (int target : layer_counts) {
    target = std::min(target, m);
    while (static_cast<int>(clusters.size()) < target) {
      int pick = -1;
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (!clusters[i].splittable) continue;
        if (pick < 0 || clusters[i].split.ncut_value < clusters[pick].split.ncut_value ||
            (clusters[i].split.ncut_value == clusters[pick].split.ncut_value &&
             clusters[i].members.front() < clusters[pick].members.front())) {
          pick = static_cast<int>(i);
        }
      }
      if (pick < 0) break;  // nothing left to split: target was clipped to m

      Cluster parent = std::move(clusters[pick]);
      clusters.erase(clusters.begin() + pick);
      hierarchy.split_log.emplace_back(static_cast<int>(clusters.size()) + 2,
                                       parent.split.ncut_value);
      clusters.push_back(make_cluster(graph, std::move(parent.split.part_a)));
      clusters.push_back(make_cluster(graph, std::move(parent.split.part_b)));
    }
    hierarchy.layers.push_back(snapshot_layer(clusters, stats, m));
  }
  return hierarchy;
}

}  // namespace chosal
