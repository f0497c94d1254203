#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dynet/dynamics.hpp"
#include "dynet/generators.hpp"
#include "dynet/ingest.hpp"
#include "dynet/tactics.hpp"

namespace dynet {

/// The built-in ten-vertex demo network with its three-step growth script;
/// the standard smoke scenario for all five single-edge tactics.
Graph worked_example_graph();
std::vector<Expansion> worked_example_trace();
inline constexpr VertexId kWorkedExampleNewcomer = 0;

/// The five single-edge tactics in canonical order.
std::vector<TacticKind> default_tactics();

/// Newcomer id used by the drivers; far above any id the generators or
/// datasets reach.
inline constexpr VertexId kDriverNewcomer = 1'000'000'000;

struct ExperimentConfig {
  std::vector<TacticKind> tactics = default_tactics();
  std::vector<ModelKind> models = {ModelKind::BA, ModelKind::JR,
                                   ModelKind::RichClub, ModelKind::Onion};
  std::vector<int> degree_sweep = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> growth_sweep = {10, 50, 100, 200, 500};
  int fixed_degree = 6;
  std::size_t network_size = 500;
  double jr_p = 0.5;
  int trials = 100;
  std::uint64_t seed = 1;
  int horizon = 500;
  RsetMode rset_mode = RsetMode::ExampleConsistent;
  unsigned threads = 0;  // 0: hardware concurrency

  // dataset replay
  std::string dataset_path;
  int starts = 1;
  std::size_t interval = 1;
  std::size_t start_at = 0;  // explicit start index; 0 means spread `starts`
};

/// One (tactic × setting × trial) outcome.
struct ResultRow {
  std::string experiment;
  std::string model;
  std::string tactic;
  std::optional<int> d;
  std::optional<int> growth;
  std::optional<std::size_t> start;
  std::optional<std::size_t> interval;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<int> cost;  // empty: did not enter
  std::optional<int> entered_at;
  std::vector<VertexId> edges_built;
  int horizon = 0;
};

/// Fixed column set shared by every experiment CSV.
extern const char* const kResultHeader;
std::string format_row(const ResultRow& row);
void write_rows(std::ostream& out, const std::vector<ResultRow>& rows);

/// Mean/stddev aggregate per (experiment, model, tactic, d, growth).
void write_summary(std::ostream& out, const std::vector<ResultRow>& rows);

struct WorkedExampleOutcome {
  TacticKind tactic;
  IPResult result;
};

struct WorkedExampleReport {
  std::vector<WorkedExampleOutcome> outcomes;
  bool ok = false;  // rmax and rbtw finished in 2 timestamps
};

/// Runs the five tactics over the demo scenario, prints one line per
/// tactic plus the tie-break note, and reports whether the remote-center
/// tactics hit their expected two-step finish.
WorkedExampleReport cmd_fig1(RsetMode mode, std::ostream& out);

/// Model sweeps: cost of each tactic as average degree (growth 1) or
/// growth rate (degree fixed) varies. Rows are deterministic for a fixed
/// config and seed.
std::vector<ResultRow> cmd_experiment2_degree(const ExperimentConfig& cfg);
std::vector<ResultRow> cmd_experiment2_growth(const ExperimentConfig& cfg);

/// Dataset replay: each tactic from each configured start snapshot.
std::vector<ResultRow> cmd_experiment1(const ExperimentConfig& cfg);

/// Temporal profile rows (size, graph diameter, center diameter, max
/// center-to-ref distance), one per snapshot.
void write_profile(std::ostream& out, const std::vector<ProfileRow>& rows);

}  // namespace dynet
