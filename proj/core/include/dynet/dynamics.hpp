#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dynet/graph.hpp"
#include "dynet/metrics.hpp"
#include "dynet/tactics.hpp"

namespace dynet {

/// One environment move: vertices and edges joining the network this
/// timestamp. Every connected component of the added structure must touch
/// the existing graph, and nothing may touch the newcomer. removed_edges is
/// only ever populated by the rewiring generator; every other source is
/// purely additive.
struct Expansion {
  std::vector<VertexId> new_vertices;
  std::vector<Edge> new_edges;
  std::vector<Edge> removed_edges;

  bool empty() const {
    return new_vertices.empty() && new_edges.empty() && removed_edges.empty();
  }
};

/// Produces the environment's move for each timestamp. `pending_links` is
/// the newcomer move already committed for this timestamp; most sources
/// ignore it, the path-growing opponent uses it to anticipate. Returns
/// nothing when the trace is exhausted.
class TraceSource {
 public:
  virtual ~TraceSource() = default;
  virtual std::optional<Expansion> next(
      const Graph& current, VertexId newcomer,
      const std::vector<VertexId>& pending_links) = 0;
};

/// Finite, fixed list of expansions.
class ScriptedTrace final : public TraceSource {
 public:
  explicit ScriptedTrace(std::vector<Expansion> steps)
      : steps_(std::move(steps)) {}
  std::optional<Expansion> next(const Graph&, VertexId,
                                const std::vector<VertexId>&) override;

 private:
  std::vector<Expansion> steps_;
  std::size_t at_ = 0;
};

/// Grows a fresh path of `length` vertices at the vertex furthest from the
/// newcomer, re-evaluated against the newcomer's committed move each step.
/// Never exhausts.
class PathOpponentTrace final : public TraceSource {
 public:
  explicit PathOpponentTrace(int length) : length_(length) {}
  std::optional<Expansion> next(const Graph& current, VertexId newcomer,
                                const std::vector<VertexId>& pending) override;

 private:
  int length_;
};

/// One integration run: the newcomer joins `initial` (which must not
/// contain it) under `tactic` while `trace` drives the environment.
struct IPRun {
  Graph initial;
  VertexId newcomer;
  TacticKind tactic;
  TraceSource* trace = nullptr;
  RsetMode rset_mode = RsetMode::ExampleConsistent;
  int max_steps = 500;
};

/// Per-snapshot observables recorded along a run.
struct StepMeta {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Distance radius;
  Distance diameter;
  Distance newcomer_ecc;
  bool newcomer_in_center = false;
};

struct IPResult {
  /// First timestamp whose snapshot has the newcomer in the center; empty
  /// if the run ended without entering.
  std::optional<int> entered_at;
  /// Timestamps on which the newcomer built at least one edge before
  /// entering.
  int cost = 0;
  /// Link targets in build order.
  std::vector<VertexId> edges_built;
  std::vector<StepMeta> steps;
  /// Horizon the run was clipped to.
  int max_steps = 0;

  bool entered() const { return entered_at.has_value(); }
};

/// One simultaneous move: g ⊕ (f ⊕ (s ⊗ u)). Removals (if any) apply
/// first. Throws if s touches u or an existing link, if f touches u, or if
/// a component of f floats free of g.
Graph ip_step(const Graph& g, const Expansion& f,
              const std::vector<VertexId>& s, VertexId u);

/// Runs the protocol: each timestamp the tactic picks links from the
/// previous snapshot only, the trace supplies the expansion, both apply at
/// once. Stops on entry, on exhaustion with nothing left to do, or at
/// max_steps.
IPResult run_ip(IPRun& run);

/// The path-attachment move: a fresh path of `length` vertices hanging off
/// a vertex of g furthest from u (ties to the smallest id; the smallest-id
/// max-eccentricity vertex when u is isolated). `next_id` supplies fresh
/// vertex ids and is advanced.
Expansion adversary_expansion(const Graph& g, VertexId u, int length,
                              VertexId& next_id);

/// How far the observed centers wander from a reference vertex.
struct BoundedCenterReport {
  std::size_t union_center_size = 0;
  Distance max_center_dist_to_ref;
  VertexId ref = -1;
};

/// union of centers and max center-to-ref distance over a snapshot prefix.
/// Throws if ref is missing from any snapshot.
BoundedCenterReport bounded_center_report(std::span<const Graph> snapshots,
                                          VertexId ref);

/// One row per snapshot: vertex count, graph diameter, max pairwise
/// distance within the center, and max center-to-ref distance.
struct ProfileRow {
  std::size_t size = 0;
  Distance graph_diameter;
  Distance center_diameter;
  Distance dist_ref;
};

std::vector<ProfileRow> temporal_profile(std::span<const Graph> snapshots,
                                         VertexId ref);

/// Per-step metadata as a JSON document.
std::string to_json(const IPResult& r);

/// One-line summary: tactic,seed,cost,entered_at.
std::string csv_summary_row(const IPResult& r, std::string_view tactic,
                            std::uint64_t seed);

}  // namespace dynet
