#pragma once

#include <cstdint>
#include <compare>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dynet {

/// Opaque vertex label. Ids need not be contiguous; their total order is used
/// for deterministic tie-breaking throughout the library.
using VertexId = std::int64_t;

/// Hop count between two vertices, or unreachable. Unreachable compares
/// greater than every finite value.
class Distance {
 public:
  constexpr Distance() = default;  // unreachable
  static constexpr Distance hops(std::int64_t n) { return Distance(n); }
  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool is_unreachable() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }
  /// Finite hop count; only meaningful when is_finite().
  constexpr std::int64_t value() const { return v_; }

  friend constexpr auto operator<=>(Distance a, Distance b) = default;

  std::string to_string() const;

 private:
  explicit constexpr Distance(std::int64_t v) : v_(v) {}
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_ = kInf;
};

using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph. Adjacency lists are kept sorted so every
/// traversal order is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(std::initializer_list<Edge> edges);

  void add_vertex(VertexId v);
  /// Inserts both endpoints if absent. Returns false on a duplicate edge.
  /// Throws on a self-loop.
  bool add_edge(VertexId a, VertexId b);
  /// Returns false if the edge was not present.
  bool remove_edge(VertexId a, VertexId b);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId a, VertexId b) const;

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return adj_.empty(); }

  /// Degree of v; throws "vertex not found" if absent.
  std::size_t degree(VertexId v) const;
  /// Neighbors of v in ascending id order; throws "vertex not found" if absent.
  std::span<const VertexId> neighbors(VertexId v) const;

  /// All vertex ids, ascending.
  std::vector<VertexId> vertices() const;
  /// All edges as (min,max) pairs, lexicographically ascending.
  std::vector<Edge> edges() const;

  /// Largest id present, or -1 for the empty graph. Fresh ids for new
  /// vertices are allocated from max_vertex_id()+1.
  VertexId max_vertex_id() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::unordered_map<VertexId, std::vector<VertexId>> adj_;
  std::size_t edges_ = 0;
};

/// Star S⊗u: a hub plus edges hub-v for every leaf v. hub must not be a leaf.
struct Star {
  VertexId hub;
  std::vector<VertexId> leaves;
};

/// Union of vertex and edge sets. Idempotent when h ⊆ g; commutative and
/// associative up to graph equality.
Graph graph_oplus(const Graph& g, const Graph& h);

/// g plus the star's hub and its spokes. Throws if a leaf is missing from g.
Graph attach_star(const Graph& g, const Star& s);

/// Cycle over ids 0..n-1.
Graph cycle_graph(std::size_t n);

/// Complete graph over ids 0..n-1.
Graph complete_graph(std::size_t n);

}  // namespace dynet
