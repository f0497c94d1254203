#pragma once

#include <cstdint>
#include <vector>

#include "dynet/dynamics.hpp"
#include "dynet/graph.hpp"
#include "dynet/rng.hpp"

namespace dynet {

enum class ModelKind { BA, JR, RichClub, Onion };

const char* model_name(ModelKind m);
std::optional<ModelKind> parse_model(std::string_view text);

/// Shared knobs of the growth models. d is the target average degree, N the
/// target size (also the rich-club α input), growth the number of vertices
/// added per timestamp.
struct ModelParams {
  ModelKind model = ModelKind::BA;
  int d = 6;
  std::size_t target_size = 500;
  int growth = 1;
  double jr_p = 0.5;
  std::uint64_t seed = 0;
  int initial_cycle = 10;
};

/// round(d / 4p), at least 1.
int jr_sample_size(int d, double p);

/// Truncated power law q(k) ∝ k^-gamma on the integer range
/// [k_min, k_max].
struct DegreeDistribution {
  int k_min = 0;
  int k_max = 0;
  double gamma = 0.0;
  std::vector<double> weights;     // normalized, index k - k_min
  std::vector<double> cumulative;  // for sampling

  double mean() const;
  int sample(Rng& rng) const;
};

/// Exponent for which the truncated power law on [k_min, k_max] has mean d,
/// by bisection on gamma in [1.01, 6] to 1e-6. Throws when d is outside the
/// achievable mean range. k_min == k_max is a point mass and returns
/// immediately.
double calibrate_gamma(double d, int k_min, int k_max);

DegreeDistribution power_law_distribution(double d, int k_min, int k_max);

/// Preferential attachment: `growth` fresh vertices, each linked to
/// floor(d/2) distinct existing vertices drawn with probability
/// proportional to degree (or to all of them when fewer exist).
Expansion ba_step(const Graph& g, int d, int growth, Rng& rng,
                  VertexId& next_id);

/// Friend-of-friend arrivals: each fresh vertex anchors to one uniform
/// existing vertex, then proposes m uniform non-adjacent vertices and m
/// uniform distance-2 vertices, keeping each with probability p (a vertex
/// proposed twice is considered once).
Expansion jr_step(const Graph& g, double p, int m, int growth, Rng& rng,
                  VertexId& next_id);

/// Rich-club growth: elementary events repeat until `growth` vertices have
/// arrived. With probability alpha = 2(N+1)/(Nd+2) an event adds a vertex
/// linked to a uniform existing one; otherwise it links a uniform source to
/// a target whose degree class [k] is drawn with weight k·|[k]|.
Expansion richclub_step(const Graph& g, int d, std::size_t target_size,
                        int growth, Rng& rng, VertexId& next_id);

/// Stud (half-edge) of the layered rewiring model: its owner vertex and the
/// owner's degree-layer index at the start of the step.
struct Stud {
  VertexId owner;
  int layer;
};

/// Pool of unpaired studs; drained to empty by pairing, total count always
/// even after severing.
struct StudPool {
  std::vector<Stud> studs;
};

/// Layered-shell growth: each fresh vertex draws a degree k from q (odd
/// draws rounded to an even neighbor, mean-preserving), seeds k studs,
/// severs k existing edges into 2k studs, then joins random stud pairs
/// v,w with probability 1/(1+3|s_v-s_w|). Stalled pools are resolved by
/// merging a random edge with two studs. The returned expansion carries the
/// severed edges in removed_edges. Throws "onion pairing stalled" if the
/// pool cannot be drained.
Expansion onion_step(const Graph& g, const DegreeDistribution& q, int growth,
                     Rng& rng, VertexId& next_id);

/// Cycle of params.initial_cycle vertices grown one vertex per step to
/// params.target_size with the configured model.
Graph build_initial(const ModelParams& params);

/// TraceSource adapter: owns the evolving host network (which never
/// contains the newcomer) and emits one model step per timestamp.
class ModelTrace final : public TraceSource {
 public:
  ModelTrace(ModelParams params, Graph host, Rng rng);
  /// Convenience: builds the initial host with the params seed and keeps
  /// drawing from the same stream.
  static ModelTrace grown(const ModelParams& params);

  std::optional<Expansion> next(const Graph& current, VertexId newcomer,
                                const std::vector<VertexId>& pending) override;

  const Graph& host() const { return host_; }

 private:
  ModelParams params_;
  Graph host_;
  Rng rng_;
  DegreeDistribution q_;  // onion only
  VertexId next_id_;
};

}  // namespace dynet
