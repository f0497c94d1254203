#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynet/graph.hpp"
#include "dynet/metrics.hpp"

namespace dynet {

/// The newcomer's decision rule. Canonical text encoding:
/// smax|sbtw|rmax|rbtw|muf|flood:<k>|center-adjacent
class TacticKind {
 public:
  enum class Base { SMax, SBtw, RMax, RBtw, Muf, Flood, CenterAdjacent };

  static TacticKind smax() { return TacticKind(Base::SMax); }
  static TacticKind sbtw() { return TacticKind(Base::SBtw); }
  static TacticKind rmax() { return TacticKind(Base::RMax); }
  static TacticKind rbtw() { return TacticKind(Base::RBtw); }
  static TacticKind muf() { return TacticKind(Base::Muf); }
  static TacticKind flood(int k);
  static TacticKind center_adjacent() { return TacticKind(Base::CenterAdjacent); }

  Base base() const { return base_; }
  /// Link budget per timestamp (only > 1 for flood).
  int flood_k() const { return k_; }
  bool single_edge() const { return base_ != Base::Flood; }

  std::string to_string() const;
  static std::optional<TacticKind> parse(std::string_view text);

  friend bool operator==(TacticKind a, TacticKind b) {
    return a.base_ == b.base_ && a.k_ == b.k_;
  }

 private:
  explicit TacticKind(Base b, int k = 1) : base_(b), k_(k) {}
  Base base_;
  int k_;
};

/// Which remote-center set definition to use; ExampleConsistent keeps the
/// worked example reproducible, StrictLiteral inverts the distance test.
enum class RsetMode { ExampleConsistent, StrictLiteral };

/// Inputs of one selection. The newcomer is absent from the graph until its
/// first edge exists. `profile` may carry a precomputed center profile of
/// `graph`; selections compute their own otherwise.
struct SelectionContext {
  const Graph& graph;
  VertexId newcomer;
  RsetMode rset_mode = RsetMode::ExampleConsistent;
  const CenterProfile* profile = nullptr;
};

/// Vertices at distance > radius from the newcomer (unreachable counts as
/// beyond any radius). All vertices when the newcomer is isolated or absent.
/// Never contains the newcomer. Ascending order.
std::vector<VertexId> uncovered_set(const SelectionContext& ctx);

/// Vertices close to (ExampleConsistent) or beyond (StrictLiteral) the
/// radius as seen from the vertex furthest from the newcomer. Excludes the
/// newcomer and its current neighbors. All non-neighbors when the newcomer
/// is isolated or absent. Ascending order.
std::vector<VertexId> remote_center_set(const SelectionContext& ctx);

/// SMax/SBtw/RMax/RBtw target: pool member (uncovered or remote-center set)
/// maximizing degree or betweenness, ties to the smallest id. Empty when the
/// pool is empty; R-tactics fall back to the uncovered-set rule when their
/// pool is empty and the newcomer is not yet central.
std::optional<VertexId> select_target(TacticKind kind,
                                      const SelectionContext& ctx);

/// Most-useful-friends rule: pick a well-placed neighbor of the
/// minimum-degree center vertex.
std::optional<VertexId> select_muf(const SelectionContext& ctx);

/// The k smallest-id vertices not yet linked to the newcomer.
std::vector<VertexId> select_flood(int k, const SelectionContext& ctx);

/// Smallest-id vertex within distance 1 of some center vertex and not yet
/// linked to the newcomer.
std::optional<VertexId> select_center_adjacent(const SelectionContext& ctx);

/// Uniform dispatch: the link set the tactic builds this timestamp.
std::vector<VertexId> select_edges(TacticKind kind, const SelectionContext& ctx);

struct BrokerSet {
  std::vector<VertexId> members;  // ascending
};

/// True iff linking u to every member makes u's eccentricity equal the
/// radius of the composed graph. u must be outside g; members inside.
bool is_broker_set(const Graph& g, const BrokerSet& b, VertexId u);

/// Minimum-cardinality broker set by subset enumeration (increasing size,
/// then lexicographic). Throws "no broker set within cap" when size_cap is
/// exhausted, and refuses enumerations beyond ~10^7 subsets.
BrokerSet min_broker_set_bruteforce(const Graph& g, VertexId u,
                                    std::size_t size_cap);

}  // namespace dynet
