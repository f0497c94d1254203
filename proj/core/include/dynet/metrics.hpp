#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dynet/graph.hpp"

namespace dynet {

/// Exact single-source shortest-path hop counts. Vertices in other
/// components map to Distance::unreachable(). Throws "vertex not found"
/// for an unknown source.
std::unordered_map<VertexId, Distance> bfs_distances(const Graph& g,
                                                     VertexId src);

/// Eccentricities, radius, diameter and center of a graph. On a
/// disconnected graph every eccentricity is unreachable and the center
/// (restricted to finite-eccentricity vertices) is empty.
struct CenterProfile {
  std::unordered_map<VertexId, Distance> ecc;
  Distance radius;
  Distance diameter;
  std::vector<VertexId> center;  // ascending

  bool in_center(VertexId v) const;
};

/// Throws on an empty graph.
CenterProfile center_profile(const Graph& g);

/// Unnormalized shortest-path betweenness over unordered pairs, by the
/// Brandes dependency-accumulation scheme. Pairs in different components
/// contribute nothing.
std::unordered_map<VertexId, double> betweenness(const Graph& g);

/// Average local clustering coefficient; vertices of degree < 2 contribute
/// 0. Throws on an empty graph.
double clustering_coefficient(const Graph& g);

/// Core numbers by iterative pruning.
std::unordered_map<VertexId, int> k_core_decomposition(const Graph& g);

/// Vertex set of the largest connected component (ties by smallest
/// contained id).
std::vector<VertexId> largest_component(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

/// Core/periphery coefficient: the closeness advantage of the best k-core
/// shell over the whole graph, baselined against degree-preserving
/// rewirings (10·|E| double-edge swaps each). Rewired samples that
/// disconnect are re-drawn; after bounded retries the sample is skipped
/// and counted in *skipped_samples. Requires a connected graph and
/// null_samples >= 1.
double cp_coefficient(const Graph& g, int null_samples, std::uint64_t seed,
                      int* skipped_samples = nullptr);

}  // namespace dynet
