#include "dynet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynet {

std::string Distance::to_string() const {
  return is_unreachable() ? "inf" : std::to_string(v_);
}

Graph::Graph(std::initializer_list<Edge> edges) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

void Graph::add_vertex(VertexId v) { adj_.try_emplace(v); }

namespace {

bool sorted_contains(const std::vector<VertexId>& xs, VertexId v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

void sorted_insert(std::vector<VertexId>& xs, VertexId v) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

}  // namespace

bool Graph::add_edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("self-loop edge");
  auto& na = adj_[a];
  auto& nb = adj_[b];
  if (sorted_contains(na, b)) return false;
  sorted_insert(na, b);
  sorted_insert(nb, a);
  ++edges_;
  return true;
}

bool Graph::remove_edge(VertexId a, VertexId b) {
  auto ia = adj_.find(a);
  auto ib = adj_.find(b);
  if (ia == adj_.end() || ib == adj_.end()) return false;
  if (!sorted_contains(ia->second, b)) return false;
  auto& na = ia->second;
  auto& nb = ib->second;
  na.erase(std::lower_bound(na.begin(), na.end(), b));
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --edges_;
  return true;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && sorted_contains(it->second, b);
}

std::size_t Graph::degree(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("vertex not found");
  return it->second.size();
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("vertex not found");
  return {it->second.data(), it->second.size()};
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> ids;
  ids.reserve(adj_.size());
  for (const auto& [v, _] : adj_) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> es;
  es.reserve(edges_);
  for (const auto& [v, ns] : adj_)
    for (VertexId w : ns)
      if (v < w) es.emplace_back(v, w);
  std::sort(es.begin(), es.end());
  return es;
}

VertexId Graph::max_vertex_id() const {
  VertexId m = -1;
  for (const auto& [v, _] : adj_) m = std::max(m, v);
  return m;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.adj_.size() != b.adj_.size() || a.edges_ != b.edges_) return false;
  for (const auto& [v, ns] : a.adj_) {
    auto it = b.adj_.find(v);
    if (it == b.adj_.end() || it->second != ns) return false;
  }
  return true;
}

Graph graph_oplus(const Graph& g, const Graph& h) {
  Graph out = g;
  for (VertexId v : h.vertices()) out.add_vertex(v);
  for (const auto& [a, b] : h.edges()) out.add_edge(a, b);
  return out;
}

Graph attach_star(const Graph& g, const Star& s) {
  Graph out = g;
  for (VertexId v : s.leaves)
    if (!g.has_vertex(v)) throw std::invalid_argument("star leaf not in graph");
  out.add_vertex(s.hub);
  for (VertexId v : s.leaves) {
    if (v == s.hub) throw std::invalid_argument("star hub among leaves");
    out.add_edge(s.hub, v);
  }
  return out;
}

Graph cycle_graph(std::size_t n) {
  Graph g;
  if (n == 0) return g;
  if (n == 1) {
    g.add_vertex(0);
    return g;
  }
  for (std::size_t i = 0; i < n; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex(static_cast<VertexId>(i));
    for (std::size_t j = i + 1; j < n; ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  return g;
}

}  // namespace dynet
