#include "dynet/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dynet {

Graph worked_example_graph() {
  return Graph{{1, 2}, {1, 3}, {2, 9}, {2, 8}, {2, 10}, {3, 4},
               {3, 5}, {3, 6}, {4, 6}, {5, 7}, {8, 10}};
}

std::vector<Expansion> worked_example_trace() {
  std::vector<Expansion> trace(3);
  trace[0].new_vertices = {11};
  trace[0].new_edges = {{9, 11}};
  trace[1].new_vertices = {12};
  trace[1].new_edges = {{6, 12}};
  trace[2].new_vertices = {13};
  trace[2].new_edges = {{8, 13}};
  return trace;
}

std::vector<TacticKind> default_tactics() {
  return {TacticKind::smax(), TacticKind::sbtw(), TacticKind::rmax(),
          TacticKind::rbtw(), TacticKind::muf()};
}

const char* const kResultHeader =
    "experiment,model,tactic,d,growth,start,interval,trial,seed,cost,"
    "entered_at,edges_built,horizon";

namespace {

template <typename T>
std::string opt_str(const std::optional<T>& x) {
  return x ? std::to_string(*x) : std::string("-");
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> at{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = at.fetch_add(1); i < n; i = at.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
  std::uint64_t x = base;
  for (std::uint64_t v : {a, b, c}) {
    x ^= v + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
  }
  return x;
}

}  // namespace

std::string format_row(const ResultRow& row) {
  std::string out;
  out += row.experiment;
  out += ',' + row.model;
  out += ',' + row.tactic;
  out += ',' + opt_str(row.d);
  out += ',' + opt_str(row.growth);
  out += ',' + opt_str(row.start);
  out += ',' + opt_str(row.interval);
  out += ',' + std::to_string(row.trial);
  out += ',' + std::to_string(row.seed);
  out += ',';
  out += row.cost ? std::to_string(*row.cost) : std::string("did-not-enter");
  out += ',' + opt_str(row.entered_at);
  out += ',';
  for (std::size_t i = 0; i < row.edges_built.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(row.edges_built[i]);
  }
  out += ',' + std::to_string(row.horizon);
  return out;
}

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
}

void write_summary(std::ostream& out, const std::vector<ResultRow>& rows) {
  struct Agg {
    int entered = 0;
    int missed = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    double edge_sum = 0.0;
  };
  std::map<std::string, Agg> groups;
  for (const auto& row : rows) {
    std::string key = row.experiment + ',' + row.model + ',' + row.tactic +
                      ',' + opt_str(row.d) + ',' + opt_str(row.growth);
    auto& agg = groups[key];
    if (row.cost) {
      ++agg.entered;
      agg.sum += *row.cost;
      agg.sum_sq += static_cast<double>(*row.cost) * *row.cost;
      agg.edge_sum += static_cast<double>(row.edges_built.size());
    } else {
      ++agg.missed;
    }
  }
  out << "experiment,model,tactic,d,growth,entered,did_not_enter,mean_cost,"
         "std_cost,mean_edges\n";
  for (const auto& [key, agg] : groups) {
    out << key << ',' << agg.entered << ',' << agg.missed << ',';
    if (agg.entered == 0) {
      out << "-,-,-\n";
      continue;
    }
    const double n = agg.entered;
    const double mean = agg.sum / n;
    const double var = std::max(0.0, agg.sum_sq / n - mean * mean);
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "%.4f,%.4f,%.4f", mean,
                  std::sqrt(var), agg.edge_sum / n);
    out << buffer << '\n';
  }
}

WorkedExampleReport cmd_fig1(RsetMode mode, std::ostream& out) {
  WorkedExampleReport report;
  out << "worked example: 10-vertex network, three scripted growth steps\n";
  for (TacticKind tactic : default_tactics()) {
    ScriptedTrace trace(worked_example_trace());
    IPRun run{worked_example_graph(), kWorkedExampleNewcomer, tactic, &trace,
              mode, 50};
    IPResult result = run_ip(run);
    out << tactic.to_string() << ": ";
    if (result.entered())
      out << "entered in " << result.cost << " timestamps, links";
    else
      out << "did not enter within horizon, links";
    for (VertexId v : result.edges_built) out << ' ' << v;
    out << '\n';
    report.outcomes.push_back({tactic, std::move(result)});
  }
  out << "note: selections are tie-break sensitive; this build resolves "
         "score ties toward the smallest vertex id, so smax/sbtw link "
         "choices can differ from other implementations of the same rules\n";
  const auto cost_of = [&](TacticKind t) -> std::optional<int> {
    for (const auto& o : report.outcomes)
      if (o.tactic == t && o.result.entered()) return o.result.cost;
    return std::nullopt;
  };
  report.ok = cost_of(TacticKind::rmax()) == 2 &&
              cost_of(TacticKind::rbtw()) == 2;
  return report;
}

namespace {

struct Task {
  ModelKind model;
  TacticKind tactic;
  int d;
  int growth;
  int trial;
};

std::vector<ResultRow> run_model_sweep(const ExperimentConfig& cfg,
                                       const std::string& experiment,
                                       bool sweep_growth) {
  std::vector<Task> tasks;
  const std::vector<int>& sweep =
      sweep_growth ? cfg.growth_sweep : cfg.degree_sweep;
  for (ModelKind model : cfg.models)
    for (TacticKind tactic : cfg.tactics)
      for (int x : sweep)
        for (int trial = 0; trial < cfg.trials; ++trial)
          tasks.push_back({model, tactic,
                           sweep_growth ? cfg.fixed_degree : x,
                           sweep_growth ? x : 1, trial});

  std::vector<ResultRow> rows(tasks.size());
  parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    // one seed per (model, setting, trial): every tactic faces the same
    // initial network and evolution trace
    const std::uint64_t seed =
        mix_seed(cfg.seed, static_cast<std::uint64_t>(task.model),
                 static_cast<std::uint64_t>(task.d) * 1000 +
                     static_cast<std::uint64_t>(task.growth),
                 static_cast<std::uint64_t>(task.trial));
    ModelParams params;
    params.model = task.model;
    params.d = task.d;
    params.target_size = cfg.network_size;
    params.growth = task.growth;
    params.jr_p = cfg.jr_p;
    params.seed = seed;
    ModelTrace trace = ModelTrace::grown(params);
    IPRun run{trace.host(), kDriverNewcomer, task.tactic, &trace,
              cfg.rset_mode, cfg.horizon};
    IPResult result = run_ip(run);

    ResultRow row;
    row.experiment = experiment;
    row.model = model_name(task.model);
    row.tactic = task.tactic.to_string();
    row.d = task.d;
    row.growth = task.growth;
    row.trial = task.trial;
    row.seed = seed;
    if (result.entered()) row.cost = result.cost;
    row.entered_at = result.entered_at;
    row.edges_built = std::move(result.edges_built);
    row.horizon = cfg.horizon;
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace

std::vector<ResultRow> cmd_experiment2_degree(const ExperimentConfig& cfg) {
  return run_model_sweep(cfg, "exp2-degree", false);
}

std::vector<ResultRow> cmd_experiment2_growth(const ExperimentConfig& cfg) {
  return run_model_sweep(cfg, "exp2-growth", true);
}

std::vector<ResultRow> cmd_experiment1(const ExperimentConfig& cfg) {
  std::ifstream in(cfg.dataset_path);
  if (!in) throw std::runtime_error("cannot open " + cfg.dataset_path);
  ParseResult parsed = parse_events(in);
  const std::size_t total = parsed.events.size();
  if (total == 0) throw std::runtime_error("no events in " + cfg.dataset_path);

  std::vector<std::size_t> starts;
  if (cfg.start_at > 0) {
    starts.push_back(cfg.start_at);
  } else {
    const std::size_t k = std::max(1, cfg.starts);
    for (std::size_t i = 1; i <= k; ++i) {
      std::size_t s = i * total / (k + 1);
      starts.push_back(std::max<std::size_t>(1, s));
    }
  }

  struct Job {
    std::size_t start;
    TacticKind tactic;
  };
  std::vector<Job> jobs;
  for (std::size_t start : starts)
    for (TacticKind tactic : cfg.tactics) jobs.push_back({start, tactic});

  std::vector<ResultRow> rows(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    ReplayTrace trace(parsed.events, cfg.interval, job.start);
    IPRun run{trace.initial(), kDriverNewcomer, job.tactic, &trace,
              cfg.rset_mode, cfg.horizon};
    IPResult result = run_ip(run);

    ResultRow row;
    row.experiment = "exp1";
    row.model = cfg.dataset_path;
    row.tactic = job.tactic.to_string();
    row.start = job.start;
    row.interval = cfg.interval;
    row.seed = 0;
    if (result.entered()) row.cost = result.cost;
    row.entered_at = result.entered_at;
    row.edges_built = std::move(result.edges_built);
    row.horizon = cfg.horizon;
    rows[i] = std::move(row);
  });
  return rows;
}

void write_profile(std::ostream& out, const std::vector<ProfileRow>& rows) {
  out << "step,size,gdiam,cdiam,dist_ref\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << i << ',' << rows[i].size << ',' << rows[i].graph_diameter.to_string()
        << ',' << rows[i].center_diameter.to_string() << ','
        << rows[i].dist_ref.to_string() << '\n';
  }
}

}  // namespace dynet
