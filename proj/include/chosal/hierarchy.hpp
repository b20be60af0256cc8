#pragma once

#include <Eigen/Dense>
#include <vector>

#include "chosal/segmentation.hpp"

namespace chosal {

/// Fully-connected symmetric region graph. w(i,j) >= 0, w(i,i) = 0.
/// Deliberately not pruned to adjacent pairs: regions split by an occluder
/// can still merge.
struct WeightedGraph {
  Eigen::MatrixXd weights;
  double sigma_c2 = 0.0;
  double sigma_s2 = 0.0;

  int size() const { return static_cast<int>(weights.rows()); }
};

/// (|a|*|b|) * exp(-Dc/sigma_c2) * exp(-Ds/sigma_s2), where Dc is the
/// Euclidean distance of the mean Lab colors and Ds of the normalized
/// centroids. Values below 1e-300 clamp to zero.
double edge_weight(const RegionStats& a, const RegionStats& b, double sigma_c2, double sigma_s2);

WeightedGraph build_region_graph(const std::vector<RegionStats>& stats, double sigma_c2,
                                 double sigma_s2);

struct NcutSplit {
  std::vector<int> part_a;
  std::vector<int> part_b;
  double ncut_value = 0.0;
  // Relaxation diagnostics (empty/zero for the all-zero-weight fallback).
  Eigen::VectorXd eigenvector;
  double eigenvalue = 0.0;
};

/// Two-way normalized cut of the induced subgraph: second-smallest
/// eigenvector of (D-W)y = lambda*D*y via the symmetric-normalized dense
/// eigenproblem, then an exact-Ncut sweep over all distinct-value midpoints
/// plus 0. Both parts come back nonempty and sorted. An all-zero subgraph
/// splits by member parity with ncut_value 2.
NcutSplit ncut_bipartition(const WeightedGraph& graph, const std::vector<int>& members);

/// cut(A,B)/assoc(A,V) + cut(A,B)/assoc(B,V) over the induced subgraph;
/// zero-assoc terms count as zero.
double ncut_value(const WeightedGraph& graph, const std::vector<int>& part_a,
                  const std::vector<int>& part_b);

/// One snapshot of the recursive partition. Regions are numbered 0..k-1 by
/// ascending smallest base-region id; stats are exact size-weighted merges of
/// the base stats.
struct HierarchyLayer {
  std::vector<int> base_to_region;  // base region id -> layer region id
  std::vector<RegionStats> regions;
  int region_count() const { return static_cast<int>(regions.size()); }
};

/// Coarse-to-fine nested layers over the base segmentation: layers[0] is the
/// coarsest. Every later layer refines every earlier one.
struct Hierarchy {
  std::vector<HierarchyLayer> layers;
  std::vector<std::pair<int, double>> split_log;  // (cluster count after split, ncut value)

  int layer_count() const { return static_cast<int>(layers.size()); }
};

/// Best-first recursive bipartitioning: repeatedly split the cluster whose
/// optimal bipartition has the smallest Ncut value (ties: lower smallest
/// member id) and snapshot whenever the cluster count reaches the next entry
/// of layer_counts. Entries clip to the number of base regions.
Hierarchy build_hierarchy(const WeightedGraph& graph, const Segmentation& base,
                          const std::vector<RegionStats>& stats,
                          const std::vector<int>& layer_counts);

}  // namespace chosal
