#include "oracles.hpp"

#include <algorithm>

namespace dynet::oracle {

std::int64_t AllPairs::between(VertexId a, VertexId b) const {
  const auto ia = std::lower_bound(ids.begin(), ids.end(), a) - ids.begin();
  const auto ib = std::lower_bound(ids.begin(), ids.end(), b) - ids.begin();
  return dist[ia][ib];
}

std::int64_t AllPairs::eccentricity(VertexId v) const {
  const auto iv = std::lower_bound(ids.begin(), ids.end(), v) - ids.begin();
  std::int64_t e = 0;
  for (std::int64_t d : dist[iv]) e = std::max(e, d);
  return e >= kFar ? kFar : e;
}

AllPairs all_pairs(const Graph& g) {
  AllPairs ap;
  ap.ids = g.vertices();
  const std::size_t n = ap.ids.size();
  ap.dist.assign(n, std::vector<std::int64_t>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) ap.dist[i][i] = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (VertexId w : g.neighbors(ap.ids[i])) {
      const auto j =
          std::lower_bound(ap.ids.begin(), ap.ids.end(), w) - ap.ids.begin();
      ap.dist[i][j] = 1;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ap.dist[i][j] =
            std::min(ap.dist[i][j], ap.dist[i][k] + ap.dist[k][j]);
  return ap;
}

CenterOracle center_oracle(const Graph& g) {
  const AllPairs ap = all_pairs(g);
  CenterOracle c;
  std::vector<std::int64_t> ecc(ap.ids.size());
  for (std::size_t i = 0; i < ap.ids.size(); ++i)
    ecc[i] = ap.eccentricity(ap.ids[i]);
  for (std::int64_t e : ecc) {
    if (e < kFar) {
      c.radius = std::min(c.radius == kFar ? e : c.radius, e);
      c.diameter = c.diameter == kFar ? e : std::max(c.diameter, e);
    }
  }
  // diameter stays kFar only if nothing is finite; otherwise max finite
  if (c.radius != kFar) {
    c.diameter = 0;
    for (std::int64_t e : ecc)
      if (e < kFar) c.diameter = std::max(c.diameter, e);
    for (std::size_t i = 0; i < ap.ids.size(); ++i)
      if (ecc[i] == c.radius) c.center.push_back(ap.ids[i]);
  }
  return c;
}

namespace {

// depth-first enumeration of every shortest s-t path, crediting interior
// vertices
void walk_paths(const Graph& g, const AllPairs& ap, VertexId at, VertexId t,
                std::vector<VertexId>& path,
                std::vector<std::vector<VertexId>>& found) {
  if (at == t) {
    found.push_back(path);
    return;
  }
  for (VertexId next : g.neighbors(at)) {
    if (ap.between(next, t) == ap.between(at, t) - 1) {
      path.push_back(next);
      walk_paths(g, ap, next, t, path, found);
      path.pop_back();
    }
  }
}

}  // namespace

std::unordered_map<VertexId, double> betweenness_oracle(const Graph& g) {
  const AllPairs ap = all_pairs(g);
  std::unordered_map<VertexId, double> score;
  const auto ids = g.vertices();
  for (VertexId v : ids) score[v] = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const VertexId s = ids[i];
      const VertexId t = ids[j];
      if (ap.between(s, t) >= kFar) continue;
      std::vector<std::vector<VertexId>> paths;
      std::vector<VertexId> path{s};
      walk_paths(g, ap, s, t, path, paths);
      for (const auto& p : paths)
        for (std::size_t k = 1; k + 1 < p.size(); ++k)
          score[p[k]] += 1.0 / static_cast<double>(paths.size());
    }
  return score;
}

Graph random_graph(std::size_t n, double edge_prob, Rng& rng) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(edge_prob))
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

Graph random_connected_graph(std::size_t n, double extra_edge_prob, Rng& rng) {
  Graph g;
  g.add_vertex(0);
  for (std::size_t i = 1; i < n; ++i)
    g.add_edge(static_cast<VertexId>(i),
               static_cast<VertexId>(rng.below(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(extra_edge_prob))
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

}  // namespace dynet::oracle
