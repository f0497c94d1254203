#include "dynet/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dynet/metrics.hpp"

namespace dynet {

VertexId LabelTable::intern(const std::string& label) {
  auto [it, fresh] =
      ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
  if (fresh) labels_.push_back(label);
  return it->second;
}

std::optional<VertexId> LabelTable::lookup(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void LabelTable::write(std::ostream& out) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out << labels_[i] << '\t' << i << '\n';
}

ParseResult parse_events(std::istream& in) {
  ParseResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string src, dst, time_text, op_text;
    if (!(fields >> src)) continue;  // blank line
    if (src[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  why);
    };
    if (!(fields >> dst >> time_text)) fail("expected `src dst time [+|-]`");
    EdgeEvent ev;
    try {
      std::size_t used = 0;
      ev.time = std::stod(time_text, &used);
      if (used != time_text.size()) fail("bad timestamp");
    } catch (const std::exception&) {
      fail("bad timestamp");
    }
    if (ev.time < 0 || !std::isfinite(ev.time)) fail("negative time");
    if (fields >> op_text) {
      if (op_text == "+")
        ev.op = EventOp::Add;
      else if (op_text == "-")
        ev.op = EventOp::Remove;
      else
        fail("bad op, expected + or -");
      std::string extra;
      if (fields >> extra) fail("trailing fields");
    }
    ev.a = result.labels.intern(src);
    ev.b = result.labels.intern(dst);
    if (ev.a == ev.b) fail("self-loop");
    result.events.push_back(ev);
  }
  std::stable_sort(
      result.events.begin(), result.events.end(),
      [](const EdgeEvent& x, const EdgeEvent& y) { return x.time < y.time; });
  return result;
}

namespace {

void apply_event(Graph& g, const EdgeEvent& ev, SnapshotSeries& series) {
  if (ev.op == EventOp::Add) {
    if (!g.add_edge(ev.a, ev.b)) ++series.duplicate_adds;
  } else {
    if (!g.remove_edge(ev.a, ev.b)) ++series.missing_removes;
  }
}

}  // namespace

SnapshotSeries snapshots(const std::vector<EdgeEvent>& events,
                         const SnapshotPolicy& policy) {
  SnapshotSeries series;
  Graph g;
  if (std::holds_alternative<PerEvent>(policy)) {
    for (const auto& ev : events) {
      apply_event(g, ev, series);
      series.graphs.push_back(g);
    }
  } else if (const auto* fp = std::get_if<FixedPeriod>(&policy)) {
    if (fp->width <= 0) throw std::invalid_argument("period width must be > 0");
    if (!events.empty()) {
      const double last = events.back().time;
      std::size_t at = 0;
      for (double boundary = fp->width;; boundary += fp->width) {
        while (at < events.size() && events[at].time <= boundary)
          apply_event(g, events[at++], series);
        series.graphs.push_back(g);
        if (boundary >= last) break;
      }
    }
  } else {
    const auto& en = std::get<EveryN>(policy);
    if (en.n == 0) throw std::invalid_argument("n must be >= 1");
    std::size_t in_group = 0;
    for (const auto& ev : events) {
      apply_event(g, ev, series);
      if (++in_group == en.n) {
        series.graphs.push_back(g);
        in_group = 0;
      }
    }
    if (in_group > 0) series.graphs.push_back(g);
  }
  return series;
}

DatasetStats dataset_stats(const Graph& g, std::size_t n_timestamps,
                           int cp_null_samples, std::uint64_t seed) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  DatasetStats stats;
  Graph work = g;
  auto comp = largest_component(g);
  if (comp.size() != g.vertex_count()) {
    work = induced_subgraph(g, comp);
    stats.used_largest_component = true;
  }
  stats.vertices = work.vertex_count();
  stats.edges = work.edge_count();
  stats.clust_coef = clustering_coefficient(work);
  for (VertexId v : work.vertices())
    stats.max_degree = std::max(stats.max_degree, work.degree(v));
  auto profile = center_profile(work);
  stats.diameter = profile.diameter;
  stats.center_size = profile.center.size();
  stats.timestamps = n_timestamps;
  stats.cp_coef = cp_coefficient(work, cp_null_samples, seed);
  return stats;
}

ReplayTrace::ReplayTrace(std::vector<EdgeEvent> events, std::size_t interval,
                         std::size_t start_at)
    : events_(std::move(events)), interval_(interval), at_(start_at) {
  if (interval_ < 1) throw std::invalid_argument("interval must be >= 1");
  if (start_at > events_.size())
    throw std::invalid_argument("start beyond event stream");
  for (std::size_t i = 0; i < start_at; ++i) {
    const auto& ev = events_[i];
    if (ev.op == EventOp::Add)
      initial_.add_edge(ev.a, ev.b);
    else
      ++skipped_removals_;
  }
  if (initial_.empty())
    throw std::invalid_argument("start_at leaves an empty initial graph");
  cumulative_ = initial_;
}

std::optional<Expansion> ReplayTrace::next(const Graph&, VertexId,
                                           const std::vector<VertexId>&) {
  if (at_ >= events_.size() && deferred_.empty()) return std::nullopt;
  std::vector<Edge> candidates = std::move(deferred_);
  deferred_.clear();
  for (std::size_t taken = 0; taken < interval_ && at_ < events_.size();
       ++taken) {
    const auto& ev = events_[at_++];
    if (ev.op == EventOp::Remove) {
      ++skipped_removals_;
      continue;
    }
    if (cumulative_.has_edge(ev.a, ev.b)) continue;  // replayed duplicate
    candidates.emplace_back(ev.a, ev.b);
  }

  // only edges whose component reaches the current graph may enter; edges
  // floating free (both endpoints unseen) wait for a connecting event
  Expansion f;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < candidates.size();) {
      const auto [a, b] = candidates[i];
      if (cumulative_.has_vertex(a) || cumulative_.has_vertex(b)) {
        if (!cumulative_.has_vertex(a)) f.new_vertices.push_back(a);
        if (!cumulative_.has_vertex(b)) f.new_vertices.push_back(b);
        if (cumulative_.add_edge(a, b)) f.new_edges.emplace_back(a, b);
        candidates.erase(candidates.begin() +
                         static_cast<std::ptrdiff_t>(i));
        moved = true;
      } else {
        ++i;
      }
    }
  }
  deferred_ = std::move(candidates);
  return f;
}

std::vector<EdgeEvent> export_events(const std::vector<Graph>& series) {
  std::vector<EdgeEvent> events;
  Graph prev;
  double t = 0.0;
  for (const auto& g : series) {
    t += 1.0;
    for (const auto& [a, b] : g.edges())
      if (!prev.has_edge(a, b)) events.push_back({t, a, b, EventOp::Add});
    for (const auto& [a, b] : prev.edges())
      if (!g.has_edge(a, b)) events.push_back({t, a, b, EventOp::Remove});
    prev = g;
  }
  return events;
}

void write_events(std::ostream& out, const std::vector<EdgeEvent>& events) {
  for (const auto& ev : events) {
    out << ev.a << ' ' << ev.b << ' ';
    const double r = std::round(ev.time);
    if (std::abs(ev.time - r) < 1e-12)
      out << static_cast<long long>(r);
    else
      out << ev.time;
    if (ev.op == EventOp::Remove) out << " -";
    out << '\n';
  }
}

}  // namespace dynet
