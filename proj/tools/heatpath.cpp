// Copyright 2026 The Heatpath Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// heatpath: map generation, single plan runs, benchmark matrices and SVG
// rendering from the command line.
//
// Exit status: 0 success, 2 usage error, 1 runtime error.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heatpath/heatpath.hpp"

namespace {

using namespace heatpath;

// Bad flag values the option parser cannot catch on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VertexId parse_vertex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected i,j but got '" + text + "'");
  const auto i = parse_double(text.substr(0, comma));
  const auto j = parse_double(text.substr(comma + 1));
  if (!i || !j || *i != static_cast<int>(*i) || *j != static_cast<int>(*j)) {
    throw UsageError("expected integer i,j but got '" + text + "'");
  }
  return {static_cast<int>(*i), static_cast<int>(*j)};
}

// Writes the whole payload or nothing: the content is rendered first, so a
// failure before this point never leaves a partial file behind.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string utc_stamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const CLI::Validator kPlannerName(
    [](std::string& s) -> std::string {
      return parse_planner_kind(s) ? std::string() : "unknown algorithm '" + s + "'";
    },
    "ALGO", "planner name");

// ---------------------------------------------------------------------------
// gen-map

struct GenMapArgs {
  std::uint64_t seed = 0;
  int width = 0;
  int height = 0;
  std::vector<double> probs;
  double cell_size = kDefaultCellSize;
  std::string out;
};

void add_gen_map(CLI::App& app, GenMapArgs& a) {
  auto* cmd = app.add_subcommand("gen-map", "Generate a seeded random heatmap CSV");
  cmd->add_option("--seed", a.seed, "PRNG seed")->required();
  cmd->add_option("--width", a.width, "Columns")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--height", a.height, "Rows")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--probs", a.probs, "Class probabilities, one per palette class")
      ->delimiter(',');
  cmd->add_option("--cell-size", a.cell_size, "Cell edge length in meters")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--out", a.out, "Output CSV path")->required();
}

int run_gen_map(const GenMapArgs& a) {
  const ClassPalette palette = ClassPalette::default_palette();
  std::optional<std::vector<double>> probs;
  if (!a.probs.empty()) {
    if (a.probs.size() != palette.size()) {
      throw UsageError("--probs needs " + std::to_string(palette.size()) + " values");
    }
    probs = a.probs;
  }
  Heatmap map = random_heatmap(a.seed, a.width, a.height, palette, probs);
  if (a.cell_size != kDefaultCellSize) {
    map = Heatmap(map.width(), map.height(), {map.cells().begin(), map.cells().end()}, palette,
                  a.cell_size);
  }
  write_file(a.out, to_csv(map));
  std::cout << a.out << " (" << a.width << "x" << a.height << ")\n";
  const auto counts = class_histogram(map, palette);
  for (std::size_t k = 0; k < palette.size(); ++k) {
    std::cout << "  " << palette[k].label << " (" << format_decimal(palette[k].heat_value)
              << "): " << counts[k] << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// plan

struct PlanArgs {
  std::string map;
  std::string algo;
  double dm = 0.0;
  int n = 1;
  std::vector<std::string> depots;
  std::optional<std::uint64_t> seed;
  double r_th = 0.0;
  double r_min = 1.0;
  int vwrr_radius = 1;
  double penalty = 10.0;
  double speed = 15.0;
  double hover = 2.0;
  bool honor_cell_size = false;
  bool stamp = false;
  std::string out;
};

void add_plan(CLI::App& app, PlanArgs& a) {
  auto* cmd = app.add_subcommand("plan", "Plan coverage paths on a heatmap");
  cmd->add_option("--map", a.map, "Heatmap CSV")->required();
  cmd->add_option("--algo", a.algo, "zigzag | na | heu | svrec")->required()->check(kPlannerName);
  cmd->add_option("--dm", a.dm, "Total fleet endurance in grid units")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", a.n, "Fleet size")->check(CLI::PositiveNumber);
  auto* depot = cmd->add_option("--depot", a.depots, "Depot i,j (once, or once per UAV)");
  cmd->add_option("--seed", a.seed, "Draw the depot from this seed")->excludes(depot);
  cmd->add_option("--r-th", a.r_th, "Skip targets need r above this");
  cmd->add_option("--r-min", a.r_min, "Sparse trigger on mean neighbor r");
  cmd->add_option("--vwrr-radius", a.vwrr_radius, "Tie-break window half-width")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--penalty", a.penalty, "Heu-Greedy revisit penalty")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--speed", a.speed, "Cruise speed, m/s")->check(CLI::PositiveNumber);
  cmd->add_option("--hover", a.hover, "Hover per covered cell, s")->check(CLI::PositiveNumber);
  cmd->add_flag("--honor-cell-size", a.honor_cell_size, "Use the map's # cell_size= header");
  cmd->add_flag("--stamp", a.stamp, "Record the UTC creation time in the plan");
  cmd->add_option("-o,--out", a.out, "Output plan JSON")->required();
}

int run_plan(const PlanArgs& a) {
  const ClassPalette palette = ClassPalette::default_palette();
  LoadOptions opts;
  opts.honor_cell_size_header = a.honor_cell_size;
  const Heatmap map = load_heatmap_file(a.map, palette, opts);
  const HeatGraph g = build_heat_graph(map);

  std::vector<VertexId> depots;
  for (const std::string& d : a.depots) depots.push_back(parse_vertex(d));
  if (depots.empty()) {
    if (a.seed) {
      Rng rng(*a.seed);
      depots.push_back(g.vertex(static_cast<std::size_t>(rng.below(g.size()))));
    } else {
      depots.push_back({0, 0});
    }
  }

  PlannerConfig cfg;
  cfg.n = a.n;
  cfg.d_m_total = a.dm;
  cfg.r_th = a.r_th;
  cfg.r_min = a.r_min;
  cfg.vwrr_radius = a.vwrr_radius;
  cfg.penalty = a.penalty;
  MultiPlan plan = orchestrate_multi(*parse_planner_kind(a.algo), g, depots, cfg);
  plan.seed = a.seed;

  nlohmann::json doc = plan_to_json(plan);
  if (a.stamp) doc["stamp"] = utc_stamp();
  write_file(a.out, doc.dump(1) + "\n");

  const PlanMetrics m = evaluate(plan, g);
  TimeModel tm;
  tm.speed = a.speed;
  tm.hover = a.hover;
  tm.cell_size = g.cell_size();
  std::cout << "R=" << format_fixed(m.R_total) << " sigma=" << m.sigma_count << " d=[";
  for (std::size_t k = 0; k < m.d_per_uav.size(); ++k) {
    std::cout << (k ? "," : "") << format_fixed(m.d_per_uav[k]);
  }
  std::cout << "] time=" << format_fixed(mission_time(plan, tm).makespan) << "s terminated=";
  for (std::size_t k = 0; k < plan.trajectories.size(); ++k) {
    std::cout << (k ? "," : "") << to_string(plan.trajectories[k].termination);
  }
  std::cout << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string spec;
  std::vector<std::uint64_t> map_seeds;
  std::vector<std::string> map_files;
  int width = 50;
  int height = 50;
  std::vector<std::string> algos;
  std::vector<double> dm;
  std::vector<int> n;
  int rounds = 1;
  std::uint64_t depot_seed = 0;
  std::vector<double> time_targets;
  std::vector<double> probs;
  unsigned threads = 0;
  bool summary = false;
  std::string means_out;
  std::string out;
};

void add_bench(CLI::App& app, BenchArgs& a) {
  auto* cmd = app.add_subcommand("bench", "Run an experiment matrix and emit a CSV report");
  auto* spec = cmd->add_option("--spec", a.spec, "Experiment spec JSON");
  auto* seeds = cmd->add_option("--map-seed", a.map_seeds, "Random map seed (repeatable)")
                    ->delimiter(',');
  auto* files = cmd->add_option("--map", a.map_files, "Heatmap CSV (repeatable)");
  auto* width = cmd->add_option("--width", a.width, "Random map columns")->check(CLI::PositiveNumber);
  auto* height = cmd->add_option("--height", a.height, "Random map rows")->check(CLI::PositiveNumber);
  auto* algos = cmd->add_option("--algos", a.algos, "Planners, comma separated")
                    ->delimiter(',')
                    ->check(kPlannerName);
  auto* dm = cmd->add_option("--dm", a.dm, "d_m values, comma separated")->delimiter(',');
  auto* n = cmd->add_option("--n", a.n, "Fleet sizes, comma separated")->delimiter(',');
  auto* rounds = cmd->add_option("--rounds", a.rounds, "Depot draws per cell")
                     ->check(CLI::PositiveNumber);
  auto* depot_seed = cmd->add_option("--depot-seed", a.depot_seed, "Seed for depot draws");
  auto* probs = cmd->add_option("--probs", a.probs, "Class probabilities")->delimiter(',');
  cmd->add_option("--time-targets", a.time_targets, "R targets for time columns")->delimiter(',');
  cmd->add_option("--threads", a.threads, "Worker threads (default: all, capped by HEATPATH_THREADS)");
  cmd->add_flag("--summary", a.summary, "Print a per-cell mean table");
  cmd->add_option("--means-out", a.means_out, "Also write per-cell means CSV");
  cmd->add_option("-o,--out", a.out, "Report CSV path (default stdout)");
  for (CLI::Option* inline_flag : {seeds, files, width, height, algos, dm, n, rounds, depot_seed, probs}) {
    spec->excludes(inline_flag);
  }
}

ExperimentSpec bench_spec(const BenchArgs& a) {
  if (!a.spec.empty()) {
    std::ifstream in(a.spec);
    if (!in) throw IoError("cannot open experiment spec '" + a.spec + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(a.spec + ": " + e.what());
    }
    ExperimentSpec spec = experiment_from_json(doc);
    if (!a.time_targets.empty()) spec.time_targets = a.time_targets;
    return spec;
  }
  ExperimentSpec spec;
  for (std::uint64_t s : a.map_seeds) spec.maps.push_back(MapSource::random(s, a.width, a.height));
  for (const std::string& f : a.map_files) spec.maps.push_back(MapSource::from_file(f));
  if (spec.maps.empty()) throw UsageError("bench needs --spec, --map-seed or --map");
  if (a.dm.empty()) throw UsageError("bench needs --dm");
  if (!a.algos.empty()) {
    spec.algorithms.clear();
    for (const std::string& name : a.algos) spec.algorithms.push_back(*parse_planner_kind(name));
  }
  spec.d_m_values = a.dm;
  if (!a.n.empty()) spec.n_values = a.n;
  spec.rounds = a.rounds;
  spec.depot_seed = a.depot_seed;
  spec.time_targets = a.time_targets;
  if (!a.probs.empty()) spec.class_probs = a.probs;
  return spec;
}

int run_bench(const BenchArgs& a) {
  const ExperimentSpec spec = bench_spec(a);
  const BenchResult result = run_experiment(spec, a.threads);
  std::ostringstream report;
  write_report_csv(report, result.rows, spec.time_targets);
  if (a.out.empty()) {
    std::cout << report.str();
  } else {
    write_file(a.out, report.str());
  }
  if (!a.means_out.empty()) {
    std::ostringstream means;
    write_means_csv(means, result.means, spec.time_targets);
    write_file(a.means_out, means.str());
  }
  if (a.summary) {
    // Keep stdout a clean CSV when the report goes there.
    std::ostream& os = a.out.empty() ? std::cerr : std::cout;
    write_summary(os, result.means, spec.time_targets);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// render

struct RenderArgs {
  std::string map;
  std::string plan;
  std::string out;
  int cell_pixels = 16;
};

void add_render(CLI::App& app, RenderArgs& a) {
  auto* cmd = app.add_subcommand("render", "Draw plan trajectories over a heatmap as SVG");
  cmd->add_option("--map", a.map, "Heatmap CSV")->required();
  cmd->add_option("--plan", a.plan, "Plan JSON")->required();
  cmd->add_option("-o,--out", a.out, "Output SVG")->required();
  cmd->add_option("--cell-pixels", a.cell_pixels, "Pixels per cell")->check(CLI::Range(2, 4096));
}

int run_render(const RenderArgs& a) {
  const ClassPalette palette = ClassPalette::default_palette();
  const Heatmap map = load_heatmap_file(a.map, palette);
  const MultiPlan plan = read_plan_file(a.plan);
  RenderStyle style;
  style.cell_pixels = a.cell_pixels;
  const std::string svg = render_svg(map, plan, palette, style);
  write_file(a.out, svg);
  std::cout << a.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat-weighted UAV coverage planning"};
  app.require_subcommand(1);
  GenMapArgs gen_map;
  PlanArgs plan;
  BenchArgs bench;
  RenderArgs render;
  add_gen_map(app, gen_map);
  add_plan(app, plan);
  add_bench(app, bench);
  add_render(app, render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "heatpath: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand("gen-map")) return run_gen_map(gen_map);
    if (app.got_subcommand("plan")) return run_plan(plan);
    if (app.got_subcommand("bench")) return run_bench(bench);
    if (app.got_subcommand("render")) return run_render(render);
  } catch (const UsageError& e) {
    std::cerr << "heatpath: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "heatpath: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
