#pragma once

// Independent reference implementations used to check the library: a cubic
// all-pairs relaxation, exhaustive shortest-path counting, and seeded
// random-graph helpers. Deliberately naive and kept apart from the
// library's own algorithms.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dynet/graph.hpp"
#include "dynet/rng.hpp"

namespace dynet::oracle {

inline constexpr std::int64_t kFar = 1'000'000'000;

/// All-pairs distances by Floyd-Warshall relaxation; kFar = unreachable.
struct AllPairs {
  std::vector<VertexId> ids;  // ascending
  std::vector<std::vector<std::int64_t>> dist;

  std::int64_t between(VertexId a, VertexId b) const;
  std::int64_t eccentricity(VertexId v) const;  // kFar if disconnected
};

AllPairs all_pairs(const Graph& g);

/// Radius/diameter/center computed from the relaxation table.
struct CenterOracle {
  std::int64_t radius = kFar;
  std::int64_t diameter = kFar;
  std::vector<VertexId> center;
};

CenterOracle center_oracle(const Graph& g);

/// Betweenness by explicit enumeration of every shortest path (viable for
/// small n only).
std::unordered_map<VertexId, double> betweenness_oracle(const Graph& g);

/// Erdos-Renyi-style random graph over ids 0..n-1.
Graph random_graph(std::size_t n, double edge_prob, Rng& rng);

/// Random connected graph: random spanning tree plus extra random edges.
Graph random_connected_graph(std::size_t n, double extra_edge_prob, Rng& rng);

}  // namespace dynet::oracle
