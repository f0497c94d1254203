#include "dynet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dynet {

const char* model_name(ModelKind m) {
  switch (m) {
    case ModelKind::BA: return "ba";
    case ModelKind::JR: return "jr";
    case ModelKind::RichClub: return "richclub";
    case ModelKind::Onion: return "onion";
  }
  return "?";
}

std::optional<ModelKind> parse_model(std::string_view text) {
  if (text == "ba") return ModelKind::BA;
  if (text == "jr") return ModelKind::JR;
  if (text == "richclub") return ModelKind::RichClub;
  if (text == "onion") return ModelKind::Onion;
  return std::nullopt;
}

int jr_sample_size(int d, double p) {
  if (p <= 0.0 || p > 1.0) throw std::invalid_argument("p must be in (0,1]");
  return std::max(1, static_cast<int>(std::lround(d / (4.0 * p))));
}

double DegreeDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    m += weights[i] * static_cast<double>(k_min + static_cast<int>(i));
  return m;
}

int DegreeDistribution::sample(Rng& rng) const {
  return k_min + static_cast<int>(rng.pick_cumulative(cumulative));
}

namespace {

double power_law_mean(double gamma, int k_min, int k_max) {
  double num = 0.0, den = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double w = std::pow(static_cast<double>(k), -gamma);
    num += w * k;
    den += w;
  }
  return num / den;
}

}  // namespace

double calibrate_gamma(double d, int k_min, int k_max) {
  if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
  if (k_min == k_max) {
    if (std::abs(d - k_min) > 1e-9)
      throw std::invalid_argument("d outside achievable mean range");
    return 1.0;  // point mass, exponent immaterial
  }
  if (k_max < k_min) throw std::invalid_argument("k_max must be >= k_min");
  double lo = 1.01, hi = 6.0;
  // mean is strictly decreasing in gamma
  const double mean_lo = power_law_mean(lo, k_min, k_max);
  const double mean_hi = power_law_mean(hi, k_min, k_max);
  if (d > mean_lo || d < mean_hi)
    throw std::invalid_argument("d outside achievable mean range");
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double m = power_law_mean(mid, k_min, k_max);
    if (std::abs(m - d) < 1e-6) return mid;
    if (m > d)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

DegreeDistribution power_law_distribution(double d, int k_min, int k_max) {
  DegreeDistribution q;
  q.k_min = k_min;
  q.k_max = k_max;
  q.gamma = calibrate_gamma(d, k_min, k_max);
  double total = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double w =
        k_min == k_max ? 1.0 : std::pow(static_cast<double>(k), -q.gamma);
    q.weights.push_back(w);
    total += w;
  }
  double cum = 0.0;
  for (auto& w : q.weights) {
    w /= total;
    cum += w;
    q.cumulative.push_back(cum);
  }
  q.cumulative.back() = 1.0;
  return q;
}

namespace {

// working view over host + this step's mutations; keeps sampling structures
// deterministic
struct WorkingGraph {
  Graph g;
  Expansion out;

  explicit WorkingGraph(const Graph& host) : g(host) {}

  void add_vertex(VertexId v) {
    g.add_vertex(v);
    out.new_vertices.push_back(v);
  }
  bool add_edge(VertexId a, VertexId b) {
    if (!g.add_edge(a, b)) return false;
    out.new_edges.emplace_back(std::min(a, b), std::max(a, b));
    return true;
  }
  void remove_edge(VertexId a, VertexId b) {
    g.remove_edge(a, b);
    const Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::find(out.new_edges.begin(), out.new_edges.end(), e);
    if (it != out.new_edges.end())
      out.new_edges.erase(it);  // cancel an edge made earlier this step
    else
      out.removed_edges.push_back(e);
  }
  bool created_this_step(VertexId a, VertexId b) const {
    const Edge e{std::min(a, b), std::max(a, b)};
    return std::find(out.new_edges.begin(), out.new_edges.end(), e) !=
           out.new_edges.end();
  }
};

VertexId uniform_vertex(const std::vector<VertexId>& sorted_ids, Rng& rng) {
  return sorted_ids[rng.below(sorted_ids.size())];
}

}  // namespace

Expansion ba_step(const Graph& g, int d, int growth, Rng& rng,
                  VertexId& next_id) {
  if (g.empty() || g.edge_count() == 0)
    throw std::invalid_argument("attachment needs a nonempty seed graph");
  const int links_wanted = std::max(1, d / 2);
  WorkingGraph w(g);
  // endpoint multiset: picking uniformly from it is degree-proportional
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * g.edge_count() + 2 * growth * links_wanted);
  for (const auto& [a, b] : g.edges()) {
    endpoints.push_back(a);
    endpoints.push_back(b);
  }
  for (int i = 0; i < growth; ++i) {
    const std::size_t existing = w.g.vertex_count();
    const VertexId v = next_id++;
    const std::size_t want =
        std::min<std::size_t>(links_wanted, existing);
    std::vector<VertexId> targets;
    if (want == existing) {
      targets = w.g.vertices();
    } else {
      std::unordered_set<VertexId> chosen;
      std::size_t guard = 0;
      while (chosen.size() < want && guard++ < 100000)
        chosen.insert(endpoints[rng.below(endpoints.size())]);
      targets.assign(chosen.begin(), chosen.end());
      std::sort(targets.begin(), targets.end());
    }
    w.add_vertex(v);
    for (VertexId t : targets) {
      w.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return w.out;
}

Expansion jr_step(const Graph& g, double p, int m, int growth, Rng& rng,
                  VertexId& next_id) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (g.empty()) throw std::invalid_argument("empty graph");
  WorkingGraph w(g);
  for (int i = 0; i < growth; ++i) {
    const auto existing = w.g.vertices();
    const VertexId v = next_id++;
    w.add_vertex(v);
    const VertexId anchor = uniform_vertex(existing, rng);
    w.add_edge(v, anchor);

    std::vector<VertexId> proposed;
    auto already_proposed = [&](VertexId x) {
      return std::find(proposed.begin(), proposed.end(), x) != proposed.end();
    };

    // uniform strangers
    std::vector<VertexId> strangers;
    for (VertexId x : existing)
      if (x != anchor) strangers.push_back(x);
    for (int j = 0; j < m && !strangers.empty(); ++j) {
      const std::size_t at = rng.below(strangers.size());
      const VertexId x = strangers[at];
      strangers.erase(strangers.begin() + static_cast<std::ptrdiff_t>(at));
      proposed.push_back(x);
      if (rng.bernoulli(p)) w.add_edge(v, x);
    }

    // friends of friends: distance exactly 2 given the links made so far
    std::vector<VertexId> fof;
    for (VertexId n : w.g.neighbors(v))
      for (VertexId x : w.g.neighbors(n))
        if (x != v && !w.g.has_edge(v, x)) fof.push_back(x);
    std::sort(fof.begin(), fof.end());
    fof.erase(std::unique(fof.begin(), fof.end()), fof.end());
    for (int j = 0; j < m && !fof.empty(); ++j) {
      const std::size_t at = rng.below(fof.size());
      const VertexId x = fof[at];
      fof.erase(fof.begin() + static_cast<std::ptrdiff_t>(at));
      if (already_proposed(x)) continue;  // one consideration per vertex
      proposed.push_back(x);
      if (rng.bernoulli(p)) w.add_edge(v, x);
    }
  }
  return w.out;
}

Expansion richclub_step(const Graph& g, int d, std::size_t target_size,
                        int growth, Rng& rng, VertexId& next_id) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  const double n = static_cast<double>(target_size);
  const double alpha = 2.0 * (n + 1.0) / (n * static_cast<double>(d) + 2.0);
  WorkingGraph w(g);
  int added = 0;
  std::size_t guard = 0;
  while (added < growth) {
    if (++guard > 1000000)
      throw std::runtime_error("rich-club event loop stalled");
    if (rng.bernoulli(alpha)) {
      const auto existing = w.g.vertices();
      const VertexId v = next_id++;
      w.add_vertex(v);
      w.add_edge(v, uniform_vertex(existing, rng));
      ++added;
      continue;
    }
    // link event: target degree class [k] drawn with weight k|[k]|
    const auto existing = w.g.vertices();
    std::map<std::size_t, std::vector<VertexId>> classes;
    for (VertexId v : existing) classes[w.g.degree(v)].push_back(v);
    std::vector<std::size_t> class_degree;
    std::vector<double> cum;
    double total = 0.0;
    for (const auto& [k, members] : classes) {
      total += static_cast<double>(k) * static_cast<double>(members.size());
      class_degree.push_back(k);
      cum.push_back(total);
    }
    if (total <= 0.0) continue;  // only isolated vertices, no valid target
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      const VertexId source = uniform_vertex(existing, rng);
      const std::size_t cls = rng.pick_cumulative(cum);
      const auto& members = classes.at(class_degree[cls]);
      const VertexId target = members[rng.below(members.size())];
      if (target == source || w.g.has_edge(source, target)) continue;
      w.add_edge(source, target);
      placed = true;
    }
    // saturated neighborhoods: drop the event and move on
  }
  return w.out;
}

namespace {

// layer = rank of the degree among the distinct degree values present
struct LayerTable {
  std::vector<std::size_t> distinct;  // ascending

  explicit LayerTable(const Graph& g) {
    for (VertexId v : g.vertices()) distinct.push_back(g.degree(v));
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
  }
  int layer_of(std::size_t degree) const {
    return static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(),
                                             degree) -
                            distinct.begin());
  }
};

// consecutive rejected draws before a stalled pool is resolved by merging;
// generous so that distant-layer studs usually pair by the coin rather
// than by a structure-blind merge
constexpr int kOnionStallThreshold = 1000;

int evenize_degree(int k, const DegreeDistribution& q, Rng& rng) {
  if (k % 2 == 0) return k;
  // mean-preserving coin between the even neighbors, clamped to support
  if (k - 1 < q.k_min) return k + 1;
  if (k + 1 > q.k_max) return k - 1;
  return rng.bernoulli(0.5) ? k + 1 : k - 1;
}

}  // namespace

Expansion onion_step(const Graph& g, const DegreeDistribution& q, int growth,
                     Rng& rng, VertexId& next_id) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("rewiring needs existing edges");
  WorkingGraph w(g);
  for (int arrival = 0; arrival < growth; ++arrival) {
    const LayerTable layers(w.g);
    std::unordered_map<VertexId, std::size_t> degree_at_start;
    for (VertexId x : w.g.vertices()) degree_at_start.emplace(x, w.g.degree(x));

    // severable edges: present now and not created this step
    std::vector<Edge> severable;
    for (const auto& e : w.g.edges())
      if (!w.created_this_step(e.first, e.second)) severable.push_back(e);

    // a fresh vertex can hold at most one edge per existing vertex; keep k
    // comfortably below that while the graph is still small
    const int cap = static_cast<int>(
        std::min(severable.size(), w.g.vertex_count() / 2));
    int k = evenize_degree(q.sample(rng), q, rng);
    for (int tries = 0; k > cap && tries < 1000; ++tries)
      k = evenize_degree(q.sample(rng), q, rng);
    k = std::min(k, cap & ~1);
    if (k < 1) throw std::invalid_argument("not enough severable edges");

    const VertexId v = next_id++;
    w.add_vertex(v);

    StudPool pool;
    for (int i = 0; i < k; ++i)
      pool.studs.push_back({v, layers.layer_of(static_cast<std::size_t>(k))});
    for (int i = 0; i < k; ++i) {
      const std::size_t at = rng.below(severable.size());
      const auto [a, b] = severable[at];
      severable.erase(severable.begin() + static_cast<std::ptrdiff_t>(at));
      w.remove_edge(a, b);
      pool.studs.push_back({a, layers.layer_of(degree_at_start.at(a))});
      pool.studs.push_back({b, layers.layer_of(degree_at_start.at(b))});
    }

    auto pop_stud = [&](std::size_t i) {
      pool.studs[i] = pool.studs.back();
      pool.studs.pop_back();
    };

    int stall = 0;
    int forced = 0;
    while (!pool.studs.empty()) {
      if (pool.studs.size() == 1)
        throw std::runtime_error("onion pairing stalled");
      const std::size_t i = rng.below(pool.studs.size());
      std::size_t j = rng.below(pool.studs.size());
      if (i == j) continue;
      const Stud a = pool.studs[i];
      const Stud b = pool.studs[j];
      const bool joinable = a.owner != b.owner && !w.g.has_edge(a.owner, b.owner);
      const double p = 1.0 / (1.0 + 3.0 * std::abs(a.layer - b.layer));
      if (joinable && rng.bernoulli(p)) {
        w.add_edge(a.owner, b.owner);
        pop_stud(std::max(i, j));
        pop_stud(std::min(i, j));
        stall = 0;
        continue;
      }
      if (++stall < kOnionStallThreshold) continue;

      // stalled: merge one existing edge with two studs
      stall = 0;
      if (++forced > 200)
        throw std::runtime_error("onion pairing stalled (merge budget)");
      const std::vector<Edge> mergeable = w.g.edges();
      bool merged = false;
      for (int attempt = 0; attempt < 200 && !merged && !mergeable.empty();
           ++attempt) {
        const auto [x, y] = mergeable[rng.below(mergeable.size())];
        const std::size_t si = rng.below(pool.studs.size());
        std::size_t sj = rng.below(pool.studs.size());
        if (si == sj) continue;
        const Stud s1 = pool.studs[si];
        const Stud s2 = pool.studs[sj];
        if (s1.owner == x || s1.owner == y || s2.owner == x || s2.owner == y)
          continue;
        if (w.g.has_edge(x, s1.owner) || w.g.has_edge(y, s2.owner)) continue;
        w.remove_edge(x, y);
        w.add_edge(x, s1.owner);
        w.add_edge(y, s2.owner);
        pop_stud(std::max(si, sj));
        pop_stud(std::min(si, sj));
        merged = true;
      }
      if (!merged)
        throw std::runtime_error(
            "onion pairing stalled (no mergeable edge; pool " +
            std::to_string(pool.studs.size()) + ")");
    }
  }
  return w.out;
}

Graph build_initial(const ModelParams& params) {
  if (params.initial_cycle < 3)
    throw std::invalid_argument("initial cycle needs >= 3 vertices");
  Graph g = cycle_graph(static_cast<std::size_t>(params.initial_cycle));
  if (g.vertex_count() >= params.target_size) return g;
  Rng rng(params.seed);
  VertexId next_id = g.max_vertex_id() + 1;
  DegreeDistribution q;
  if (params.model == ModelKind::Onion) {
    const int k_max = static_cast<int>(std::ceil(
        std::sqrt(static_cast<double>(params.target_size) * params.d)));
    q = power_law_distribution(params.d, 2, k_max);
  }
  const int m = jr_sample_size(params.d, params.jr_p);
  while (g.vertex_count() < params.target_size) {
    Expansion f;
    switch (params.model) {
      case ModelKind::BA:
        f = ba_step(g, params.d, 1, rng, next_id);
        break;
      case ModelKind::JR:
        f = jr_step(g, params.jr_p, m, 1, rng, next_id);
        break;
      case ModelKind::RichClub:
        f = richclub_step(g, params.d, params.target_size, 1, rng, next_id);
        break;
      case ModelKind::Onion:
        f = onion_step(g, q, 1, rng, next_id);
        break;
    }
    for (const auto& [a, b] : f.removed_edges) g.remove_edge(a, b);
    for (VertexId v : f.new_vertices) g.add_vertex(v);
    for (const auto& [a, b] : f.new_edges) g.add_edge(a, b);
  }
  return g;
}

ModelTrace::ModelTrace(ModelParams params, Graph host, Rng rng)
    : params_(params),
      host_(std::move(host)),
      rng_(rng),
      next_id_(host_.max_vertex_id() + 1) {
  if (params_.model == ModelKind::Onion) {
    const int k_max = static_cast<int>(std::ceil(
        std::sqrt(static_cast<double>(params_.target_size) * params_.d)));
    q_ = power_law_distribution(params_.d, 2, k_max);
  }
}

ModelTrace ModelTrace::grown(const ModelParams& params) {
  Graph host = build_initial(params);
  // a separate stream keeps the trace independent of how long the build ran
  return ModelTrace(params, std::move(host),
                    Rng::for_trial(params.seed, 0x6d6f64656cULL));
}

std::optional<Expansion> ModelTrace::next(const Graph&, VertexId newcomer,
                                          const std::vector<VertexId>&) {
  // ids must stay clear of the newcomer's
  if (next_id_ == newcomer) ++next_id_;
  Expansion f;
  switch (params_.model) {
    case ModelKind::BA:
      f = ba_step(host_, params_.d, params_.growth, rng_, next_id_);
      break;
    case ModelKind::JR:
      f = jr_step(host_, params_.jr_p, jr_sample_size(params_.d, params_.jr_p),
                  params_.growth, rng_, next_id_);
      break;
    case ModelKind::RichClub:
      f = richclub_step(host_, params_.d, params_.target_size, params_.growth,
                        rng_, next_id_);
      break;
    case ModelKind::Onion:
      f = onion_step(host_, q_, params_.growth, rng_, next_id_);
      break;
  }
  for (const auto& [a, b] : f.removed_edges) host_.remove_edge(a, b);
  for (VertexId v : f.new_vertices) host_.add_vertex(v);
  for (const auto& [a, b] : f.new_edges) host_.add_edge(a, b);
  return f;
}

}  // namespace dynet
