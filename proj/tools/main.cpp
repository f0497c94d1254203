// Command-line front end: worked-example check, dataset replay, model
// sweeps, temporal profiles, snapshot generation and dataset statistics.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynet/experiments.hpp"
#include "dynet/generators.hpp"
#include "dynet/ingest.hpp"
#include "dynet/metrics.hpp"

namespace {

using namespace dynet;

std::vector<TacticKind> parse_tactics(const std::string& list) {
  std::vector<TacticKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = TacticKind::parse(item);
    if (!t) throw CLI::ValidationError("tactics", "unknown tactic: " + item);
    out.push_back(*t);
  }
  if (out.empty()) throw CLI::ValidationError("tactics", "empty tactic list");
  return out;
}

std::vector<ModelKind> parse_models(const std::string& list) {
  if (list == "all")
    return {ModelKind::BA, ModelKind::JR, ModelKind::RichClub,
            ModelKind::Onion};
  std::vector<ModelKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = parse_model(item);
    if (!m) throw CLI::ValidationError("models", "unknown model: " + item);
    out.push_back(*m);
  }
  if (out.empty()) throw CLI::ValidationError("models", "empty model list");
  return out;
}

std::vector<int> parse_int_list(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

struct OutStream {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit OutStream(const std::string& path) {
    if (!path.empty() && path != "-") {
      file.open(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + path);
      os = &file;
    }
  }
  std::ostream& get() { return *os; }
};

void emit_rows(const std::vector<ResultRow>& rows, const std::string& out_path,
               const std::string& format) {
  OutStream out(out_path);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json r;
      r["experiment"] = row.experiment;
      r["model"] = row.model;
      r["tactic"] = row.tactic;
      if (row.d) r["d"] = *row.d;
      if (row.growth) r["growth"] = *row.growth;
      if (row.start) r["start"] = *row.start;
      if (row.interval) r["interval"] = *row.interval;
      r["trial"] = row.trial;
      r["seed"] = row.seed;
      if (row.cost)
        r["cost"] = *row.cost;
      else
        r["cost"] = "did-not-enter";
      if (row.entered_at) r["entered_at"] = *row.entered_at;
      r["edges_built"] = row.edges_built;
      r["horizon"] = row.horizon;
      j.push_back(std::move(r));
    }
    out.get() << j.dump(2) << '\n';
  } else {
    write_rows(out.get(), rows);
  }
  if (!out_path.empty() && out_path != "-") {
    std::ofstream summary(out_path + ".summary.csv", std::ios::binary);
    write_summary(summary, rows);
  } else {
    std::cerr << "-- summary --\n";
    write_summary(std::cerr, rows);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"newcomer-integration toolkit for dynamic networks"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int trials = 100;
  int horizon = 500;
  std::string rset_mode = "example";
  std::string out_path;
  std::string format = "csv";
  unsigned threads = 0;
  app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
  app.add_option("--trials", trials, "trials per setting")
      ->capture_default_str();
  app.add_option("--horizon", horizon, "max timestamps per run")
      ->capture_default_str();
  app.add_option("--rset-mode", rset_mode,
                 "remote-center set variant: example|strict")
      ->check(CLI::IsMember({"example", "strict"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = hardware)");

  auto mode_of = [&] {
    return rset_mode == "strict" ? RsetMode::StrictLiteral
                                 : RsetMode::ExampleConsistent;
  };

  // fig1: run the built-in worked example
  auto* fig1 = app.add_subcommand("fig1", "five tactics on the worked example");

  // exp1: replay a dataset
  auto* exp1 = app.add_subcommand("exp1", "tactic costs over a dataset replay");
  std::string dataset;
  int starts = 1;
  std::size_t interval = 1;
  std::size_t start_at = 0;
  std::string tactics_arg = "smax,sbtw,rmax,rbtw,muf";
  exp1->add_option("--in", dataset, "edge-event file")->required();
  exp1->add_option("--starts", starts, "number of evenly spaced start points")
      ->capture_default_str();
  exp1->add_option("--start-at", start_at,
                   "explicit start event index (overrides --starts)");
  exp1->add_option("--interval", interval, "events bundled per timestamp")
      ->capture_default_str();
  exp1->add_option("--tactics", tactics_arg, "comma-separated tactic list")
      ->capture_default_str();

  // exp2-degree / exp2-growth: model sweeps
  auto* exp2d = app.add_subcommand("exp2-degree",
                                   "tactic costs as average degree varies");
  auto* exp2g = app.add_subcommand("exp2-growth",
                                   "tactic costs as growth rate varies");
  std::string models_arg = "all";
  std::string dlist = "2,3,4,5,6,7,8,9,10";
  std::string llist = "10,50,100,200,500";
  int deg = 6;
  std::size_t size = 500;
  int growth = 1;
  double jr_p = 0.5;
  for (auto* cmd : {exp2d, exp2g}) {
    cmd->add_option("--models", models_arg, "ba,jr,richclub,onion or all")
        ->capture_default_str();
    cmd->add_option("--tactics", tactics_arg, "comma-separated tactic list")
        ->capture_default_str();
    cmd->add_option("--size", size, "initial network size")
        ->capture_default_str();
    cmd->add_option("--jr-p", jr_p, "link probability of the jr model")
        ->capture_default_str();
  }
  exp2d->add_option("--deg-list", dlist, "degrees to sweep")
      ->capture_default_str();
  exp2g->add_option("--deg", deg, "fixed average degree")
      ->capture_default_str();
  exp2g->add_option("--growth-list", llist, "growth rates to sweep")
      ->capture_default_str();

  // profile: temporal profile of a dataset or model run
  auto* profile = app.add_subcommand("profile", "per-snapshot center profile");
  std::string profile_in;
  std::string model_arg = "ba";
  int profile_steps = 5;
  VertexId ref = 0;
  std::string policy_arg = "per-event";
  double period_width = 1.0;
  std::size_t every_n = 1;
  profile->add_option("--in", profile_in, "edge-event file (omit for --model)");
  profile->add_option("--model", model_arg, "ba|jr|richclub|onion");
  profile->add_option("--steps", profile_steps, "model steps to profile")
      ->capture_default_str();
  profile->add_option("--ref", ref, "reference vertex id")
      ->capture_default_str();
  profile->add_option("--deg", deg, "model average degree")
      ->capture_default_str();
  profile->add_option("--size", size, "model target size")
      ->capture_default_str();
  profile->add_option("--growth", growth, "vertices per model step")
      ->capture_default_str();
  profile->add_option("--jr-p", jr_p, "jr link probability")
      ->capture_default_str();
  profile->add_option("--policy", policy_arg,
                      "snapshot policy: per-event|period|every-n")
      ->check(CLI::IsMember({"per-event", "period", "every-n"}))
      ->capture_default_str();
  profile->add_option("--width", period_width, "period width for --policy period");
  profile->add_option("--n", every_n, "group size for --policy every-n");

  // generate: write a model run as an edge-event file
  auto* generate = app.add_subcommand("generate",
                                      "grow a model and export its events");
  int gen_steps = 490;
  generate->add_option("--model", model_arg, "ba|jr|richclub|onion")
      ->capture_default_str();
  generate->add_option("--deg", deg, "average degree")->capture_default_str();
  generate->add_option("--size", size, "target size (stops when reached)")
      ->capture_default_str();
  generate->add_option("--growth", growth, "vertices per timestamp")
      ->capture_default_str();
  generate->add_option("--steps", gen_steps, "max timestamps")
      ->capture_default_str();
  generate->add_option("--jr-p", jr_p, "jr link probability")
      ->capture_default_str();

  // stats: dataset statistics on the last snapshot
  auto* stats = app.add_subcommand("stats", "last-snapshot dataset statistics");
  std::string stats_in;
  std::string labels_out;
  int cp_samples = 20;
  stats->add_option("--in", stats_in, "edge-event file")->required();
  stats->add_option("--labels-out", labels_out, "write the label table here");
  stats->add_option("--cp-samples", cp_samples,
                    "null-model samples for the cp coefficient")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig1->parsed()) {
      OutStream out(out_path);
      auto report = cmd_fig1(mode_of(), out.get());
      return report.ok ? 0 : 1;
    }

    ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.horizon = horizon;
    cfg.rset_mode = mode_of();
    cfg.threads = threads;
    cfg.network_size = size;
    cfg.jr_p = jr_p;

    if (exp1->parsed()) {
      cfg.dataset_path = dataset;
      cfg.starts = starts;
      cfg.start_at = start_at;
      cfg.interval = interval;
      cfg.tactics = parse_tactics(tactics_arg);
      const auto t0 = std::chrono::steady_clock::now();
      auto rows = cmd_experiment1(cfg);
      const auto dt = std::chrono::steady_clock::now() - t0;
      emit_rows(rows, out_path, format);
      std::cerr << "exp1: " << rows.size() << " rows in "
                << std::chrono::duration<double>(dt).count() << " s\n";
      return 0;
    }

    if (exp2d->parsed() || exp2g->parsed()) {
      cfg.models = parse_models(models_arg);
      cfg.tactics = parse_tactics(tactics_arg);
      cfg.fixed_degree = deg;
      cfg.degree_sweep = parse_int_list(dlist);
      cfg.growth_sweep = parse_int_list(llist);
      const auto t0 = std::chrono::steady_clock::now();
      auto rows = exp2d->parsed() ? cmd_experiment2_degree(cfg)
                                  : cmd_experiment2_growth(cfg);
      const auto dt = std::chrono::steady_clock::now() - t0;
      emit_rows(rows, out_path, format);
      std::cerr << (exp2d->parsed() ? "exp2-degree: " : "exp2-growth: ")
                << rows.size() << " rows in "
                << std::chrono::duration<double>(dt).count() << " s\n";
      return 0;
    }

    if (profile->parsed()) {
      std::vector<Graph> series;
      if (!profile_in.empty()) {
        std::ifstream in(profile_in);
        if (!in) throw std::runtime_error("cannot open " + profile_in);
        auto parsed = parse_events(in);
        SnapshotPolicy policy = PerEvent{};
        if (policy_arg == "period") policy = FixedPeriod{period_width};
        if (policy_arg == "every-n") policy = EveryN{every_n};
        series = snapshots(parsed.events, policy).graphs;
      } else {
        auto kind = parse_model(model_arg);
        if (!kind) throw std::runtime_error("unknown model " + model_arg);
        ModelParams params{*kind, deg, size, growth, jr_p, seed};
        Graph g = cycle_graph(10);
        ModelTrace trace(params, g, Rng(seed));
        series.push_back(g);
        for (int i = 0; i < profile_steps; ++i) {
          trace.next(trace.host(), kDriverNewcomer, {});
          series.push_back(trace.host());
        }
      }
      OutStream out(out_path);
      write_profile(out.get(), temporal_profile(series, ref));
      return 0;
    }

    if (generate->parsed()) {
      auto kind = parse_model(model_arg);
      if (!kind) throw std::runtime_error("unknown model " + model_arg);
      ModelParams params{*kind, deg, size, growth, jr_p, seed};
      Graph g = cycle_graph(10);
      ModelTrace trace(params, g, Rng(seed));
      std::vector<EdgeEvent> events;
      for (const auto& [a, b] : g.edges())
        events.push_back({0.0, a, b, EventOp::Add});
      for (int step = 1; step <= gen_steps; ++step) {
        if (trace.host().vertex_count() >= size) break;
        auto f = trace.next(trace.host(), kDriverNewcomer, {});
        for (const auto& [a, b] : f->removed_edges)
          events.push_back({static_cast<double>(step), a, b, EventOp::Remove});
        for (const auto& [a, b] : f->new_edges)
          events.push_back({static_cast<double>(step), a, b, EventOp::Add});
      }
      OutStream out(out_path);
      write_events(out.get(), events);
      return 0;
    }

    if (stats->parsed()) {
      std::ifstream in(stats_in);
      if (!in) throw std::runtime_error("cannot open " + stats_in);
      auto parsed = parse_events(in);
      auto series = snapshots(parsed.events, PerEvent{});
      if (series.graphs.empty()) throw std::runtime_error("no events");
      std::size_t distinct_times = 0;
      double prev = -1.0;
      for (const auto& ev : parsed.events) {
        if (ev.time != prev) ++distinct_times;
        prev = ev.time;
      }
      auto s = dataset_stats(series.graphs.back(), distinct_times, cp_samples,
                             seed);
      if (!labels_out.empty()) {
        std::ofstream lo(labels_out, std::ios::binary);
        parsed.labels.write(lo);
      }
      nlohmann::json j;
      j["vertices"] = s.vertices;
      j["edges"] = s.edges;
      j["clust_coef"] = s.clust_coef;
      j["max_degree"] = s.max_degree;
      j["diameter"] =
          s.diameter.is_unreachable() ? -1 : s.diameter.value();
      j["center_size"] = s.center_size;
      j["timestamps"] = s.timestamps;
      j["cp_coef"] = s.cp_coef;
      j["used_largest_component"] = s.used_largest_component;
      j["duplicate_adds"] = series.duplicate_adds;
      j["missing_removes"] = series.missing_removes;
      OutStream out(out_path);
      if (format == "csv") {
        out.get() << "vertices,edges,clust_coef,max_degree,diameter,"
                     "center_size,timestamps,cp_coef\n"
                  << s.vertices << ',' << s.edges << ',' << s.clust_coef << ','
                  << s.max_degree << ',' << s.diameter.to_string() << ','
                  << s.center_size << ',' << s.timestamps << ',' << s.cp_coef
                  << '\n';
      } else {
        out.get() << j.dump(2) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
