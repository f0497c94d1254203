#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dynet/dynamics.hpp"
#include "dynet/graph.hpp"

namespace dynet {

enum class EventOp { Add, Remove };

/// One timestamped link update between two vertices.
struct EdgeEvent {
  double time = 0.0;
  VertexId a = 0;
  VertexId b = 0;
  EventOp op = EventOp::Add;
};

/// Maps arbitrary string labels from input files onto dense integer ids,
/// first come first served.
class LabelTable {
 public:
  VertexId intern(const std::string& label);
  std::optional<VertexId> lookup(const std::string& label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Two-column text form: label<TAB>id, one row per label.
  void write(std::ostream& out) const;

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

struct ParseResult {
  std::vector<EdgeEvent> events;  // stably sorted by time
  LabelTable labels;
};

/// Reads whitespace-delimited `src dst time [+|-]` lines; `#` starts a
/// comment line; a missing op means Add. Throws with the line number on
/// malformed lines, self-loops and negative times.
ParseResult parse_events(std::istream& in);

/// When to materialize a snapshot from the cumulative event stream.
struct PerEvent {};
struct FixedPeriod {
  double width;
};
struct EveryN {
  std::size_t n;
};
using SnapshotPolicy = std::variant<PerEvent, FixedPeriod, EveryN>;

struct SnapshotSeries {
  std::vector<Graph> graphs;
  std::size_t duplicate_adds = 0;    // Add of an existing edge, ignored
  std::size_t missing_removes = 0;   // Remove of an absent edge, ignored
};

/// Cumulative application of the events under the policy. PerEvent emits
/// after each event; FixedPeriod at every boundary k·width up to the last
/// event; EveryN after each full group and once more for a trailing
/// partial group.
SnapshotSeries snapshots(const std::vector<EdgeEvent>& events,
                         const SnapshotPolicy& policy);

/// Last-snapshot topology summary. Computed on the largest component when
/// the graph is disconnected (flagged).
struct DatasetStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double clust_coef = 0.0;
  std::size_t max_degree = 0;
  Distance diameter;
  std::size_t center_size = 0;
  std::size_t timestamps = 0;
  double cp_coef = 0.0;
  bool used_largest_component = false;
};

DatasetStats dataset_stats(const Graph& g, std::size_t n_timestamps,
                           int cp_null_samples, std::uint64_t seed);

/// Replays the tail of an event stream as environment moves: the first
/// `start_at` events form the initial graph and each later timestamp
/// bundles up to `interval` additive events. Remove events are skipped and
/// counted. Throws if start_at lies beyond the stream.
class ReplayTrace final : public TraceSource {
 public:
  ReplayTrace(std::vector<EdgeEvent> events, std::size_t interval,
              std::size_t start_at);

  const Graph& initial() const { return initial_; }
  std::size_t skipped_removals() const { return skipped_removals_; }

  std::optional<Expansion> next(const Graph& current, VertexId newcomer,
                                const std::vector<VertexId>& pending) override;

 private:
  std::vector<EdgeEvent> events_;
  Graph initial_;
  Graph cumulative_;
  std::vector<Edge> deferred_;  // edges floating free of the graph so far
  std::size_t interval_;
  std::size_t at_;
  std::size_t skipped_removals_ = 0;
};

/// Inverse of snapshots(): the additive event multiset recovered from
/// consecutive snapshot diffs, written as `src dst time` lines.
std::vector<EdgeEvent> export_events(const std::vector<Graph>& series);
void write_events(std::ostream& out, const std::vector<EdgeEvent>& events);

}  // namespace dynet
