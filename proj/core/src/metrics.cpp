#include "dynet/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "dynet/graph_index.hpp"
#include "dynet/rng.hpp"

namespace dynet {

std::unordered_map<VertexId, Distance> bfs_distances(const Graph& g,
                                                     VertexId src) {
  if (!g.has_vertex(src)) throw std::invalid_argument("vertex not found");
  GraphIndex ix(g);
  std::vector<std::int32_t> dist, queue;
  ix.bfs(ix.dense(src), dist, queue);
  std::unordered_map<VertexId, Distance> out;
  out.reserve(ix.size());
  for (std::size_t i = 0; i < ix.size(); ++i)
    out.emplace(ix.id_of(i), dist[i] < 0 ? Distance::unreachable()
                                         : Distance::hops(dist[i]));
  return out;
}

bool CenterProfile::in_center(VertexId v) const {
  return std::binary_search(center.begin(), center.end(), v);
}

CenterProfile center_profile(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  GraphIndex ix(g);
  const std::size_t n = ix.size();
  std::vector<std::int32_t> dist, queue;
  std::vector<std::int32_t> ecc(n, -1);
  std::int32_t radius = -1;
  std::int32_t diameter = -1;
  for (std::size_t i = 0; i < n; ++i) {
    ix.bfs(static_cast<std::int32_t>(i), dist, queue);
    ecc[i] = GraphIndex::eccentricity(dist);
    if (ecc[i] >= 0) {
      if (radius < 0 || ecc[i] < radius) radius = ecc[i];
      diameter = std::max(diameter, ecc[i]);
    }
  }
  CenterProfile p;
  p.ecc.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    p.ecc.emplace(ix.id_of(i), ecc[i] < 0 ? Distance::unreachable()
                                          : Distance::hops(ecc[i]));
  p.radius = radius < 0 ? Distance::unreachable() : Distance::hops(radius);
  p.diameter =
      diameter < 0 ? Distance::unreachable() : Distance::hops(diameter);
  for (std::size_t i = 0; i < n; ++i)
    if (ecc[i] >= 0 && ecc[i] == radius) p.center.push_back(ix.id_of(i));
  return p;
}

std::unordered_map<VertexId, double> betweenness(const Graph& g) {
  GraphIndex ix(g);
  const std::size_t n = ix.size();
  std::vector<double> score(n, 0.0);
  std::vector<std::int32_t> order;
  std::vector<std::int32_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<std::int32_t>> preds(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();
    order.push_back(static_cast<std::int32_t>(s));
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::int32_t v = order[head];
      for (std::int32_t w : ix.row(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const std::int32_t w = order[k];
      for (std::int32_t v : preds[w])
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      score[w] += delta[w];
    }
  }
  // each unordered pair was accumulated from both endpoints
  std::unordered_map<VertexId, double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace(ix.id_of(i), score[i] / 2.0);
  return out;
}

double clustering_coefficient(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  double total = 0.0;
  for (VertexId v : g.vertices()) {
    auto ns = g.neighbors(v);
    const std::size_t d = ns.size();
    if (d < 2) continue;
    std::size_t closed = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (g.has_edge(ns[i], ns[j])) ++closed;
    total += 2.0 * static_cast<double>(closed) /
             (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return total / static_cast<double>(g.vertex_count());
}

std::unordered_map<VertexId, int> k_core_decomposition(const Graph& g) {
  GraphIndex ix(g);
  const std::size_t n = ix.size();
  std::vector<int> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(ix.degree(i));
    max_deg = std::max(max_deg, ix.degree(i));
  }
  // bucket sort by degree, peel ascending
  std::vector<std::vector<std::int32_t>> buckets(max_deg + 1);
  for (std::size_t i = 0; i < n; ++i)
    buckets[deg[i]].push_back(static_cast<std::int32_t>(i));
  std::vector<int> core(n, 0);
  std::vector<bool> removed(n, false);
  int level = 0;
  for (std::size_t b = 0; b <= max_deg; ++b) {
    for (std::size_t at = 0; at < buckets[b].size(); ++at) {
      const std::int32_t v = buckets[b][at];
      if (removed[v] || deg[v] != static_cast<int>(b)) continue;
      level = std::max(level, deg[v]);
      core[v] = level;
      removed[v] = true;
      for (std::int32_t w : ix.row(v)) {
        if (!removed[w] && deg[w] > deg[v]) {
          --deg[w];
          buckets[deg[w]].push_back(w);
        }
      }
    }
  }
  std::unordered_map<VertexId, int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace(ix.id_of(i), core[i]);
  return out;
}

std::vector<VertexId> largest_component(const Graph& g) {
  if (g.empty()) return {};
  GraphIndex ix(g);
  std::vector<std::int32_t> comp(ix.size(), -1), dist, queue;
  std::int32_t best = -1;
  std::size_t best_size = 0;
  std::int32_t ncomp = 0;
  for (std::size_t i = 0; i < ix.size(); ++i) {
    if (comp[i] >= 0) continue;
    ix.bfs(static_cast<std::int32_t>(i), dist, queue);
    std::size_t size = 0;
    for (std::size_t j = 0; j < ix.size(); ++j)
      if (dist[j] >= 0) {
        comp[j] = ncomp;
        ++size;
      }
    if (size > best_size) {
      best_size = size;
      best = ncomp;
    }
    ++ncomp;
  }
  std::vector<VertexId> out;
  out.reserve(best_size);
  for (std::size_t i = 0; i < ix.size(); ++i)
    if (comp[i] == best) out.push_back(ix.id_of(i));
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
  Graph out;
  for (VertexId v : keep) out.add_vertex(v);
  for (VertexId v : keep)
    for (VertexId w : g.neighbors(v))
      if (v < w && out.has_vertex(w)) out.add_edge(v, w);
  return out;
}

namespace {

// mean closeness over all vertices and the best closeness ratio over the
// k-core shells; dense representation
struct ClosenessProfile {
  std::vector<double> closeness;  // by dense index
  double mean_all = 0.0;
};

ClosenessProfile closeness_all(const GraphIndex& ix) {
  ClosenessProfile cp;
  const std::size_t n = ix.size();
  cp.closeness.assign(n, 0.0);
  std::vector<std::int32_t> dist, queue;
  for (std::size_t i = 0; i < n; ++i) {
    ix.bfs(static_cast<std::int32_t>(i), dist, queue);
    std::int64_t sum = 0;
    for (std::int32_t d : dist) {
      if (d < 0) throw std::invalid_argument("graph not connected");
      sum += d;
    }
    cp.closeness[i] =
        sum == 0 ? 0.0 : static_cast<double>(n - 1) / static_cast<double>(sum);
    cp.mean_all += cp.closeness[i];
  }
  cp.mean_all /= static_cast<double>(n);
  return cp;
}

// r(G): maximum over core levels k of mean closeness of {v : core(v) >= k}
// relative to the global mean closeness
double core_closeness_ratio(const Graph& g) {
  GraphIndex ix(g);
  const auto prof = closeness_all(ix);
  auto cores = k_core_decomposition(g);
  const std::size_t n = ix.size();
  std::vector<int> core_of(n);
  int max_core = 0;
  for (std::size_t i = 0; i < n; ++i) {
    core_of[i] = cores.at(ix.id_of(i));
    max_core = std::max(max_core, core_of[i]);
  }
  // suffix means: vertices with core >= k
  double best = 1.0;
  for (int k = 0; k <= max_core; ++k) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (core_of[i] >= k) {
        sum += prof.closeness[i];
        ++count;
      }
    if (count == 0) continue;
    best = std::max(best, (sum / static_cast<double>(count)) / prof.mean_all);
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  GraphIndex ix(g);
  std::vector<std::int32_t> dist, queue;
  ix.bfs(0, dist, queue);
  return std::all_of(dist.begin(), dist.end(),
                     [](std::int32_t d) { return d >= 0; });
}

// degree-preserving double-edge swaps; aims for `target` successful swaps
// with a bounded number of attempts
Graph rewire(const Graph& g, std::size_t target, Rng& rng) {
  Graph out = g;
  auto edge_list = out.edges();
  if (edge_list.size() < 2) return out;
  std::size_t done = 0;
  std::size_t attempts = 0;
  const std::size_t max_attempts = target * 5 + 100;
  while (done < target && attempts < max_attempts) {
    ++attempts;
    const std::size_t i = rng.below(edge_list.size());
    const std::size_t j = rng.below(edge_list.size());
    if (i == j) continue;
    auto [a, b] = edge_list[i];
    auto [c, d] = edge_list[j];
    if (rng.bernoulli(0.5)) std::swap(c, d);
    // swap to (a,d),(c,b)
    if (a == d || c == b || a == c || b == d) continue;
    if (out.has_edge(a, d) || out.has_edge(c, b)) continue;
    out.remove_edge(a, b);
    out.remove_edge(c, d);
    out.add_edge(a, d);
    out.add_edge(c, b);
    edge_list[i] = {std::min(a, d), std::max(a, d)};
    edge_list[j] = {std::min(c, b), std::max(c, b)};
    ++done;
  }
  return out;
}

}  // namespace

double cp_coefficient(const Graph& g, int null_samples, std::uint64_t seed,
                      int* skipped_samples) {
  if (null_samples < 1) throw std::invalid_argument("null_samples must be >= 1");
  if (!is_connected(g) || g.empty())
    throw std::invalid_argument("graph not connected");
  const double observed = core_closeness_ratio(g);
  Rng rng(seed);
  const std::size_t swaps = 10 * g.edge_count();
  double null_sum = 0.0;
  int null_count = 0;
  int skipped = 0;
  constexpr int kRetries = 20;
  for (int s = 0; s < null_samples; ++s) {
    bool got = false;
    for (int attempt = 0; attempt < kRetries && !got; ++attempt) {
      Graph sample = rewire(g, swaps, rng);
      if (!is_connected(sample)) continue;
      null_sum += core_closeness_ratio(sample);
      ++null_count;
      got = true;
    }
    if (!got) ++skipped;
  }
  if (skipped_samples) *skipped_samples = skipped;
  if (null_count == 0) throw std::runtime_error("all rewired samples disconnected");
  return observed - null_sum / static_cast<double>(null_count);
}

}  // namespace dynet
