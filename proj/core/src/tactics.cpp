#include "dynet/tactics.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace dynet {

TacticKind TacticKind::flood(int k) {
  if (k < 1) throw std::invalid_argument("flood budget must be >= 1");
  return TacticKind(Base::Flood, k);
}

std::string TacticKind::to_string() const {
  switch (base_) {
    case Base::SMax: return "smax";
    case Base::SBtw: return "sbtw";
    case Base::RMax: return "rmax";
    case Base::RBtw: return "rbtw";
    case Base::Muf: return "muf";
    case Base::Flood: return "flood:" + std::to_string(k_);
    case Base::CenterAdjacent: return "center-adjacent";
  }
  return {};
}

std::optional<TacticKind> TacticKind::parse(std::string_view text) {
  if (text == "smax") return smax();
  if (text == "sbtw") return sbtw();
  if (text == "rmax") return rmax();
  if (text == "rbtw") return rbtw();
  if (text == "muf") return muf();
  if (text == "center-adjacent") return center_adjacent();
  constexpr std::string_view prefix = "flood:";
  if (text.substr(0, prefix.size()) == prefix) {
    int k = 0;
    auto rest = text.substr(prefix.size());
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec == std::errc() && p == rest.data() + rest.size() && k >= 1)
      return flood(k);
  }
  return std::nullopt;
}

namespace {

bool newcomer_isolated(const SelectionContext& ctx) {
  return !ctx.graph.has_vertex(ctx.newcomer) ||
         ctx.graph.degree(ctx.newcomer) == 0;
}

std::vector<VertexId> all_but(const Graph& g, VertexId u) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (v != u) out.push_back(v);
  return out;
}

// owning holder so a context without a precomputed profile works
struct ProfileRef {
  const CenterProfile* ptr;
  CenterProfile owned;
  explicit ProfileRef(const SelectionContext& ctx) {
    if (ctx.profile) {
      ptr = ctx.profile;
    } else {
      owned = center_profile(ctx.graph);
      ptr = &owned;
    }
  }
  const CenterProfile& operator*() const { return *ptr; }
  const CenterProfile* operator->() const { return ptr; }
};

// furthest vertex from u; unreachable counts as furthest, ties to the
// smallest id
std::optional<VertexId> furthest_from(const Graph& g, VertexId u) {
  auto dist = bfs_distances(g, u);
  std::optional<VertexId> best;
  Distance best_d = Distance::hops(-1);
  for (VertexId v : g.vertices()) {
    if (v == u) continue;
    Distance d = dist.at(v);
    if (!best || d > best_d) {
      best = v;
      best_d = d;
    }
  }
  return best;
}

std::optional<VertexId> argmax_by_degree(const Graph& g,
                                         const std::vector<VertexId>& pool) {
  std::optional<VertexId> best;
  std::size_t best_deg = 0;
  for (VertexId v : pool) {
    const std::size_t d = g.degree(v);
    if (!best || d > best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

std::optional<VertexId> argmax_by_betweenness(
    const Graph& g, const std::vector<VertexId>& pool) {
  if (pool.empty()) return std::nullopt;
  auto scores = betweenness(g);
  std::optional<VertexId> best;
  double best_score = 0.0;
  for (VertexId v : pool) {
    const double s = scores.at(v);
    if (!best || s > best_score) {
      best = v;
      best_score = s;
    }
  }
  return best;
}

}  // namespace

std::vector<VertexId> uncovered_set(const SelectionContext& ctx) {
  if (newcomer_isolated(ctx)) return all_but(ctx.graph, ctx.newcomer);
  ProfileRef profile(ctx);
  const Distance radius = profile->radius;
  auto dist = bfs_distances(ctx.graph, ctx.newcomer);
  std::vector<VertexId> out;
  for (VertexId v : ctx.graph.vertices()) {
    if (v == ctx.newcomer) continue;
    const Distance d = dist.at(v);
    if (d.is_unreachable() ? true : (radius.is_finite() && d > radius))
      out.push_back(v);
  }
  return out;
}

std::vector<VertexId> remote_center_set(const SelectionContext& ctx) {
  if (newcomer_isolated(ctx)) return all_but(ctx.graph, ctx.newcomer);
  ProfileRef profile(ctx);
  const Distance radius = profile->radius;
  auto x = furthest_from(ctx.graph, ctx.newcomer);
  if (!x) return {};
  auto from_x = bfs_distances(ctx.graph, *x);
  std::vector<VertexId> out;
  for (VertexId v : ctx.graph.vertices()) {
    if (v == ctx.newcomer || ctx.graph.has_edge(ctx.newcomer, v)) continue;
    const Distance d = from_x.at(v);
    const bool keep = ctx.rset_mode == RsetMode::ExampleConsistent
                          ? d < radius
                          : d > radius;
    if (keep) out.push_back(v);
  }
  return out;
}

std::optional<VertexId> select_target(TacticKind kind,
                                      const SelectionContext& ctx) {
  const auto base = kind.base();
  const bool uset_based =
      base == TacticKind::Base::SMax || base == TacticKind::Base::SBtw;
  const bool by_degree =
      base == TacticKind::Base::SMax || base == TacticKind::Base::RMax;
  if (!uset_based && base != TacticKind::Base::RMax &&
      base != TacticKind::Base::RBtw)
    throw std::invalid_argument("select_target expects smax|sbtw|rmax|rbtw");

  if (ctx.graph.empty()) return std::nullopt;
  std::vector<VertexId> pool =
      uset_based ? uncovered_set(ctx) : remote_center_set(ctx);
  if (pool.empty() && !uset_based) {
    // remote-center pool dry: retreat to the uncovered set unless the
    // newcomer is already central
    ProfileRef profile(ctx);
    if (!newcomer_isolated(ctx) && profile->in_center(ctx.newcomer))
      return std::nullopt;
    pool = uncovered_set(ctx);
  }
  if (pool.empty()) return std::nullopt;
  return by_degree ? argmax_by_degree(ctx.graph, pool)
                   : argmax_by_betweenness(ctx.graph, pool);
}

std::optional<VertexId> select_muf(const SelectionContext& ctx) {
  if (ctx.graph.empty()) return std::nullopt;
  ProfileRef profile(ctx);
  if (profile->center.empty()) return std::nullopt;
  // center vertex of least degree, ties to smallest id
  VertexId c = profile->center.front();
  std::size_t c_deg = ctx.graph.degree(c);
  for (VertexId v : profile->center) {
    const std::size_t d = ctx.graph.degree(v);
    if (d < c_deg) {
      c = v;
      c_deg = d;
    }
  }

  const bool isolated = newcomer_isolated(ctx);
  auto not_linked = [&](VertexId v) {
    return v != ctx.newcomer && !ctx.graph.has_edge(ctx.newcomer, v);
  };

  if (isolated) {
    std::vector<VertexId> nbrs(ctx.graph.neighbors(c).begin(),
                               ctx.graph.neighbors(c).end());
    return argmax_by_degree(ctx.graph, nbrs);
  }
  if (profile->in_center(ctx.newcomer)) return std::nullopt;

  auto x = furthest_from(ctx.graph, ctx.newcomer);
  if (!x || !profile->radius.is_finite()) return std::nullopt;
  auto from_x = bfs_distances(ctx.graph, *x);
  const Distance want = Distance::hops(profile->radius.value() - 1);

  std::vector<VertexId> useful;
  for (VertexId v : ctx.graph.neighbors(c))
    if (not_linked(v) && from_x.at(v) == want) useful.push_back(v);
  if (auto hit = argmax_by_degree(ctx.graph, useful)) return hit;

  // no neighbor of c sits at radius-1 from x: relax to any unlinked neighbor
  std::vector<VertexId> fallback;
  for (VertexId v : ctx.graph.neighbors(c))
    if (not_linked(v)) fallback.push_back(v);
  return argmax_by_degree(ctx.graph, fallback);
}

std::vector<VertexId> select_flood(int k, const SelectionContext& ctx) {
  if (k < 1) throw std::invalid_argument("flood budget must be >= 1");
  std::vector<VertexId> out;
  for (VertexId v : ctx.graph.vertices()) {
    if (v == ctx.newcomer) continue;
    if (ctx.graph.has_vertex(ctx.newcomer) &&
        ctx.graph.has_edge(ctx.newcomer, v))
      continue;
    out.push_back(v);
    if (out.size() == static_cast<std::size_t>(k)) break;
  }
  return out;
}

std::optional<VertexId> select_center_adjacent(const SelectionContext& ctx) {
  if (ctx.graph.empty()) return std::nullopt;
  ProfileRef profile(ctx);
  if (profile->center.empty()) return std::nullopt;
  // candidates: the center and its neighborhood
  std::vector<VertexId> near;
  for (VertexId w : profile->center) {
    near.push_back(w);
    for (VertexId v : ctx.graph.neighbors(w)) near.push_back(v);
  }
  std::sort(near.begin(), near.end());
  near.erase(std::unique(near.begin(), near.end()), near.end());
  for (VertexId v : near) {
    if (v == ctx.newcomer) continue;
    if (ctx.graph.has_vertex(ctx.newcomer) &&
        ctx.graph.has_edge(ctx.newcomer, v))
      continue;
    return v;
  }
  return std::nullopt;
}

std::vector<VertexId> select_edges(TacticKind kind,
                                   const SelectionContext& ctx) {
  switch (kind.base()) {
    case TacticKind::Base::SMax:
    case TacticKind::Base::SBtw:
    case TacticKind::Base::RMax:
    case TacticKind::Base::RBtw: {
      auto hit = select_target(kind, ctx);
      return hit ? std::vector<VertexId>{*hit} : std::vector<VertexId>{};
    }
    case TacticKind::Base::Muf: {
      auto hit = select_muf(ctx);
      return hit ? std::vector<VertexId>{*hit} : std::vector<VertexId>{};
    }
    case TacticKind::Base::Flood:
      return select_flood(kind.flood_k(), ctx);
    case TacticKind::Base::CenterAdjacent: {
      auto hit = select_center_adjacent(ctx);
      return hit ? std::vector<VertexId>{*hit} : std::vector<VertexId>{};
    }
  }
  return {};
}

bool is_broker_set(const Graph& g, const BrokerSet& b, VertexId u) {
  if (g.has_vertex(u))
    throw std::invalid_argument("newcomer already in graph");
  for (VertexId v : b.members)
    if (!g.has_vertex(v)) throw std::invalid_argument("broker outside graph");
  Graph composed = attach_star(g, Star{u, b.members});
  auto profile = center_profile(composed);
  return profile.in_center(u);
}

BrokerSet min_broker_set_bruteforce(const Graph& g, VertexId u,
                                    std::size_t size_cap) {
  const auto ids = g.vertices();
  const std::size_t n = ids.size();
  size_cap = std::min(size_cap, n);

  // keep the enumeration honest about its own cost
  double total = 0.0;
  for (std::size_t k = 1; k <= size_cap; ++k) {
    double c = 1.0;
    for (std::size_t i = 0; i < k; ++i)
      c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    total += c;
    if (total > 1e7)
      throw std::invalid_argument("broker-set enumeration too large");
  }

  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= size_cap; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      BrokerSet b;
      b.members.reserve(k);
      for (std::size_t i : pick) b.members.push_back(ids[i]);
      if (is_broker_set(g, b, u)) return b;
      // next combination, lexicographic
      std::size_t i = k;
      while (i-- > 0) {
        if (pick[i] != i + n - k) {
          ++pick[i];
          for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
        if (i == 0) goto next_size;
      }
    }
  next_size:;
  }
  throw std::runtime_error("no broker set within cap");
}

}  // namespace dynet
