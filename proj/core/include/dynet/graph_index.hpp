#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "dynet/graph.hpp"

namespace dynet {

/// Flat CSR snapshot of a Graph for repeated BFS. Vertices are renumbered
/// 0..n-1 in ascending id order; -1 marks unreachable in distance arrays.
class GraphIndex {
 public:
  explicit GraphIndex(const Graph& g) : ids_(g.vertices()) {
    const std::size_t n = ids_.size();
    xadj_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
      xadj_[i + 1] = xadj_[i] + static_cast<std::int32_t>(g.degree(ids_[i]));
    adjncy_.resize(xadj_[n]);
    for (std::size_t i = 0; i < n; ++i) {
      std::int32_t at = xadj_[i];
      for (VertexId w : g.neighbors(ids_[i])) adjncy_[at++] = dense(w);
    }
  }

  std::size_t size() const { return ids_.size(); }
  VertexId id_of(std::size_t dense_index) const { return ids_[dense_index]; }
  const std::vector<VertexId>& ids() const { return ids_; }

  /// Dense index of v, or -1 if absent.
  std::int32_t dense(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return -1;
    return static_cast<std::int32_t>(it - ids_.begin());
  }

  std::size_t degree(std::size_t i) const { return xadj_[i + 1] - xadj_[i]; }

  /// CSR neighbor row of dense vertex v.
  std::span<const std::int32_t> row(std::int32_t v) const {
    return {adjncy_.data() + xadj_[v],
            static_cast<std::size_t>(xadj_[v + 1] - xadj_[v])};
  }

  /// Unweighted single-source distances into `dist` (resized; -1 unreachable).
  /// `queue` is scratch space reused across calls.
  void bfs(std::int32_t src, std::vector<std::int32_t>& dist,
           std::vector<std::int32_t>& queue) const {
    dist.assign(size(), -1);
    queue.clear();
    queue.push_back(src);
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t v = queue[head];
      const std::int32_t dv = dist[v];
      for (std::int32_t e = xadj_[v]; e < xadj_[v + 1]; ++e) {
        const std::int32_t w = adjncy_[e];
        if (dist[w] < 0) {
          dist[w] = dv + 1;
          queue.push_back(w);
        }
      }
    }
  }

  /// Max finite distance from `dist`, or -1 if some vertex is unreachable.
  static std::int32_t eccentricity(const std::vector<std::int32_t>& dist) {
    std::int32_t m = 0;
    for (std::int32_t d : dist) {
      if (d < 0) return -1;
      m = std::max(m, d);
    }
    return m;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::int32_t> xadj_;
  std::vector<std::int32_t> adjncy_;
};

}  // namespace dynet
