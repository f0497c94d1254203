#include "dynet/dynamics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace dynet {

std::optional<Expansion> ScriptedTrace::next(const Graph&, VertexId,
                                             const std::vector<VertexId>&) {
  if (at_ >= steps_.size()) return std::nullopt;
  return steps_[at_++];
}

std::optional<Expansion> PathOpponentTrace::next(
    const Graph& current, VertexId newcomer,
    const std::vector<VertexId>& pending) {
  // anticipate: the opponent reacts to the snapshot the newcomer's committed
  // links will produce
  Graph anticipated = current;
  if (!pending.empty()) {
    anticipated.add_vertex(newcomer);
    for (VertexId v : pending) anticipated.add_edge(newcomer, v);
  }
  VertexId next_id =
      std::max(anticipated.max_vertex_id(), newcomer) + 1;
  return adversary_expansion(anticipated, newcomer, length_, next_id);
}

namespace {

// every connected component of the added structure must contain a vertex of g
void check_expansion_touches(const Graph& g, const Expansion& f) {
  // union-find over the expansion's own vertices
  std::unordered_map<VertexId, VertexId> parent;
  auto find = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto ensure = [&](VertexId v) {
    if (!parent.count(v)) parent[v] = v;
  };
  for (VertexId v : f.new_vertices) ensure(v);
  for (const auto& [a, b] : f.new_edges) {
    ensure(a);
    ensure(b);
    parent[find(a)] = find(b);
  }
  std::unordered_map<VertexId, bool> touches;
  for (const auto& [v, _] : parent) {
    VertexId r = find(v);
    if (g.has_vertex(v)) touches[r] = true;
    else touches.try_emplace(r, false);
  }
  for (const auto& [_, ok] : touches)
    if (!ok)
      throw std::invalid_argument("expansion component disjoint from graph");
}

}  // namespace

Graph ip_step(const Graph& g, const Expansion& f,
              const std::vector<VertexId>& s, VertexId u) {
  for (VertexId v : f.new_vertices)
    if (v == u) throw std::invalid_argument("expansion touches newcomer");
  for (const auto& [a, b] : f.new_edges)
    if (a == u || b == u)
      throw std::invalid_argument("expansion touches newcomer");
  for (const auto& [a, b] : f.removed_edges) {
    if (a == u || b == u)
      throw std::invalid_argument("expansion touches newcomer");
    if (!g.has_edge(a, b))
      throw std::invalid_argument("removed edge not present");
  }
  for (VertexId v : s) {
    if (v == u) throw std::invalid_argument("newcomer cannot link itself");
    if (!g.has_vertex(v)) throw std::invalid_argument("vertex not found");
    if (g.has_vertex(u) && g.has_edge(u, v))
      throw std::invalid_argument("link already exists");
  }
  check_expansion_touches(g, f);

  Graph out = g;
  for (const auto& [a, b] : f.removed_edges) out.remove_edge(a, b);
  for (VertexId v : f.new_vertices) out.add_vertex(v);
  const std::size_t before = out.edge_count();
  for (const auto& [a, b] : f.new_edges)
    if (!out.add_edge(a, b))
      throw std::invalid_argument("expansion edge already exists");
  if (!s.empty()) {
    out.add_vertex(u);
    for (VertexId v : s) out.add_edge(u, v);
  }
  if (out.edge_count() != before + f.new_edges.size() + s.size())
    throw std::logic_error("edge accounting mismatch");
  return out;
}

IPResult run_ip(IPRun& run) {
  if (run.initial.has_vertex(run.newcomer))
    throw std::invalid_argument("newcomer already in initial graph");
  if (!run.trace) throw std::invalid_argument("missing trace source");

  IPResult result;
  result.max_steps = run.max_steps;
  Graph g = run.initial;
  std::optional<CenterProfile> profile;
  if (!g.empty()) profile = center_profile(g);
  bool exhausted = false;

  for (int step = 1; step <= run.max_steps; ++step) {
    SelectionContext ctx{g, run.newcomer, run.rset_mode,
                         profile ? &*profile : nullptr};
    const bool centered =
        profile && g.has_vertex(run.newcomer) &&
        profile->in_center(run.newcomer);
    std::vector<VertexId> links =
        centered ? std::vector<VertexId>{} : select_edges(run.tactic, ctx);

    std::optional<Expansion> f;
    if (!exhausted) {
      f = run.trace->next(g, run.newcomer, links);
      if (!f) exhausted = true;
    }
    if (exhausted && links.empty()) break;  // nothing can change any more

    g = ip_step(g, f ? *f : Expansion{}, links, run.newcomer);
    profile = center_profile(g);

    if (!links.empty()) {
      ++result.cost;
      result.edges_built.insert(result.edges_built.end(), links.begin(),
                                links.end());
    }

    StepMeta meta;
    meta.vertices = g.vertex_count();
    meta.edges = g.edge_count();
    meta.radius = profile->radius;
    meta.diameter = profile->diameter;
    meta.newcomer_ecc = g.has_vertex(run.newcomer)
                            ? profile->ecc.at(run.newcomer)
                            : Distance::unreachable();
    meta.newcomer_in_center = g.has_vertex(run.newcomer) &&
                              profile->in_center(run.newcomer);
    result.steps.push_back(meta);

    if (meta.newcomer_in_center) {
      result.entered_at = step;
      break;
    }
  }
  return result;
}

Expansion adversary_expansion(const Graph& g, VertexId u, int length,
                              VertexId& next_id) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  if (length < 1) throw std::invalid_argument("path length must be >= 1");

  VertexId attach = -1;
  if (g.has_vertex(u) && g.degree(u) > 0) {
    auto dist = bfs_distances(g, u);
    Distance best = Distance::hops(-1);
    for (VertexId v : g.vertices()) {
      if (v == u) continue;
      const Distance d = dist.at(v);
      if (attach < 0 || d > best) {
        attach = v;
        best = d;
      }
    }
  } else {
    // no newcomer vantage point: smallest-id vertex of maximum eccentricity
    auto profile = center_profile(g);
    Distance best = Distance::hops(-1);
    for (VertexId v : g.vertices()) {
      if (v == u) continue;
      const Distance e = profile.ecc.at(v);
      if (attach < 0 || e > best) {
        attach = v;
        best = e;
      }
    }
  }
  if (attach < 0) throw std::invalid_argument("no attachment vertex");

  Expansion f;
  VertexId prev = attach;
  for (int i = 0; i < length; ++i) {
    const VertexId fresh = next_id++;
    f.new_vertices.push_back(fresh);
    f.new_edges.emplace_back(prev, fresh);
    prev = fresh;
  }
  return f;
}

BoundedCenterReport bounded_center_report(std::span<const Graph> snapshots,
                                          VertexId ref) {
  BoundedCenterReport report;
  report.ref = ref;
  report.max_center_dist_to_ref = Distance::hops(0);
  std::vector<VertexId> seen;
  for (const Graph& g : snapshots) {
    if (!g.has_vertex(ref)) throw std::invalid_argument("vertex not found");
    auto profile = center_profile(g);
    auto from_ref = bfs_distances(g, ref);
    for (VertexId v : profile.center) {
      seen.push_back(v);
      report.max_center_dist_to_ref =
          std::max(report.max_center_dist_to_ref, from_ref.at(v));
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  report.union_center_size = seen.size();
  if (snapshots.empty()) report.max_center_dist_to_ref = Distance::hops(0);
  return report;
}

std::vector<ProfileRow> temporal_profile(std::span<const Graph> snapshots,
                                         VertexId ref) {
  std::vector<ProfileRow> rows;
  rows.reserve(snapshots.size());
  for (const Graph& g : snapshots) {
    if (!g.has_vertex(ref)) throw std::invalid_argument("vertex not found");
    auto profile = center_profile(g);
    auto from_ref = bfs_distances(g, ref);
    ProfileRow row;
    row.size = g.vertex_count();
    row.graph_diameter = profile.diameter;
    row.center_diameter = Distance::hops(0);
    row.dist_ref = Distance::hops(0);
    for (std::size_t i = 0; i < profile.center.size(); ++i) {
      row.dist_ref = std::max(row.dist_ref, from_ref.at(profile.center[i]));
      auto from_ci = bfs_distances(g, profile.center[i]);
      for (std::size_t j = i + 1; j < profile.center.size(); ++j)
        row.center_diameter =
            std::max(row.center_diameter, from_ci.at(profile.center[j]));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string to_json(const IPResult& r) {
  nlohmann::json j;
  j["entered"] = r.entered();
  if (r.entered_at) j["entered_at"] = *r.entered_at;
  j["cost"] = r.cost;
  j["max_steps"] = r.max_steps;
  j["edges_built"] = r.edges_built;
  auto d = [](Distance x) -> nlohmann::json {
    if (x.is_unreachable()) return nullptr;
    return x.value();
  };
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& m : r.steps) {
    steps.push_back({{"vertices", m.vertices},
                     {"edges", m.edges},
                     {"radius", d(m.radius)},
                     {"diameter", d(m.diameter)},
                     {"newcomer_ecc", d(m.newcomer_ecc)},
                     {"newcomer_in_center", m.newcomer_in_center}});
  }
  j["steps"] = std::move(steps);
  return j.dump(2);
}

std::string csv_summary_row(const IPResult& r, std::string_view tactic,
                            std::uint64_t seed) {
  std::string row(tactic);
  row += ',';
  row += std::to_string(seed);
  row += ',';
  row += r.entered() ? std::to_string(r.cost) : std::string("did-not-enter");
  row += ',';
  row += r.entered_at ? std::to_string(*r.entered_at) : std::string("-");
  return row;
}

}  // namespace dynet
