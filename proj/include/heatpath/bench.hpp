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

// Seeded experiment matrices over (map, algorithm, n, d_m, round), their CSV
// report, and an exhaustive optimum for tiny instances.

#ifndef HEATPATH_BENCH_HPP_
#define HEATPATH_BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "heatpath/error.hpp"
#include "heatpath/format.hpp"
#include "heatpath/heatgraph.hpp"
#include "heatpath/heatmap.hpp"
#include "heatpath/metrics.hpp"
#include "heatpath/planners.hpp"
#include "heatpath/rng.hpp"

namespace heatpath {

// ---------------------------------------------------------------------------
// Exhaustive optimum

struct OptimalPath {
  double R = 0.0;
  std::vector<VertexId> path;
};

inline constexpr std::size_t kBruteForceMaxVertices = 16;
inline constexpr double kBruteForceMaxBudget = 8.0;

namespace detail {

class BruteForceSearch {
 public:
  BruteForceSearch(const HeatGraph& g, double budget)
      : g_(g), budget_(budget), visits_(g.size(), 0) {
    sorted_r_.assign(g.weights().begin(), g.weights().end());
    std::sort(sorted_r_.begin(), sorted_r_.end(), std::greater<>());
  }

  OptimalPath run(VertexId depot) {
    ++visits_[g_.index(depot)];
    path_.push_back(depot);
    best_.R = g_.r(depot);
    best_.path = path_;
    dfs(g_.r(depot), 0.0);
    return best_;
  }

 private:
  // Upper bound on what the remaining budget can still add: every move costs
  // at least 1, so at most floor(remaining) new vertices, each worth no more
  // than the largest r values in the map.
  double bound(double R, double spent) const {
    const auto steps = static_cast<std::size_t>(std::floor(budget_ - spent + kBudgetEpsilon));
    double extra = 0.0;
    for (std::size_t k = 0; k < sorted_r_.size() && k < steps; ++k) extra += sorted_r_[k];
    return R + extra;
  }

  void dfs(double R, double spent) {
    if (bound(R, spent) <= best_.R + 1e-9) return;
    const VertexId at = path_.back();
    for (const VertexId n : neighbors8(g_, at)) {
      const double cost = edge_weight(at, n);
      if (!fits_budget(spent, cost, budget_)) continue;
      int& visits = visits_[g_.index(n)];
      const double next_R = R + (visits == 0 ? g_.r(n) : 0.0);
      ++visits;
      path_.push_back(n);
      // Pre-order visit: the first path reaching a given R is the
      // lexicographically smallest one.
      if (next_R > best_.R + 1e-9) {
        best_.R = next_R;
        best_.path = path_;
      }
      dfs(next_R, spent + cost);
      path_.pop_back();
      --visits;
    }
  }

  const HeatGraph& g_;
  double budget_;
  std::vector<int> visits_;
  std::vector<double> sorted_r_;
  std::vector<VertexId> path_;
  OptimalPath best_;
};

}  // namespace detail

// Best first-visit R over all neighbor-step paths from `depot` whose length
// stays within d_m (revisits allowed, no skip-jumps). Among optimal paths the
// lexicographically smallest vertex sequence is returned.
inline OptimalPath brute_force_optimal(const HeatGraph& g, VertexId depot, double d_m) {
  if (g.size() > kBruteForceMaxVertices || d_m > kBruteForceMaxBudget) {
    throw ArgumentError("brute force is limited to 16 vertices and d_m <= 8");
  }
  if (!(d_m >= 0.0)) throw ArgumentError("d_m must be non-negative");
  if (!g.contains(depot)) throw ArgumentError("depot " + to_string(depot) + " is outside the map");
  detail::BruteForceSearch search(g, d_m);
  return search.run(depot);
}

// ---------------------------------------------------------------------------
// Experiment matrix

struct MapSource {
  std::optional<std::string> file;   // heatmap CSV; otherwise random
  std::uint64_t seed = 0;
  int width = 0;
  int height = 0;

  static MapSource from_file(std::string path) {
    MapSource m;
    m.file = std::move(path);
    return m;
  }
  static MapSource random(std::uint64_t seed, int width, int height) {
    MapSource m;
    m.seed = seed;
    m.width = width;
    m.height = height;
    return m;
  }

  std::string id() const {
    if (file) return *file;
    return "rand-s" + std::to_string(seed) + "-" + std::to_string(width) + "x" +
           std::to_string(height);
  }
};

struct ExperimentSpec {
  std::vector<MapSource> maps;
  std::vector<PlannerKind> algorithms{std::begin(kAllPlanners), std::end(kAllPlanners)};
  std::vector<double> d_m_values;
  std::vector<int> n_values{1};
  int rounds = 1;
  std::uint64_t depot_seed = 0;
  ClassPalette palette = ClassPalette::default_palette();
  std::optional<std::vector<double>> class_probs;
  TimeModel time_model;
  std::vector<double> time_targets;
  PlannerConfig planner;   // r_th, r_min, penalty, vwrr_radius; n and d_m come from the matrix

  void validate() const {
    if (maps.empty()) throw ArgumentError("experiment needs at least one map");
    if (algorithms.empty()) throw ArgumentError("experiment needs at least one algorithm");
    if (d_m_values.empty()) throw ArgumentError("experiment needs at least one d_m value");
    if (n_values.empty()) throw ArgumentError("experiment needs at least one n value");
    if (rounds < 1) throw ArgumentError("rounds must be >= 1");
    for (double d : d_m_values) {
      if (!(d >= 0.0)) throw ArgumentError("d_m values must be non-negative");
    }
    for (int n : n_values) {
      if (n < 1) throw ArgumentError("n values must be >= 1");
    }
    for (double t : time_targets) {
      if (!(t > 0.0)) throw ArgumentError("time targets must be positive");
    }
    time_model.validate();
  }
};

struct ReportRow {
  std::string map_id;
  PlannerKind algorithm = PlannerKind::kSvrec;
  int n = 1;
  double d_m = 0.0;
  int round = 0;
  VertexId depot;
  std::int64_t sigma_count = 0;
  double sigma_pct = 0.0;
  double R_total = 0.0;
  double makespan_s = 0.0;
  std::vector<std::optional<double>> time_to_R;   // one per spec time target

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

// Means over rounds for one (map, algorithm, n, d_m) cell.
struct CellMean {
  std::string map_id;
  PlannerKind algorithm = PlannerKind::kSvrec;
  int n = 1;
  double d_m = 0.0;
  int rounds = 0;
  double sigma_count = 0.0;
  double sigma_pct = 0.0;
  double R_total = 0.0;
  double makespan_s = 0.0;
  std::vector<std::optional<double>> time_to_R;   // mean over rounds that reached it
  std::vector<int> reached;                       // rounds that reached each target
};

struct BenchResult {
  std::vector<ReportRow> rows;
  std::vector<CellMean> means;
};

// HEATPATH_THREADS caps the worker count; otherwise hardware concurrency.
inline unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HEATPATH_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// Depot of round `round` on map `map_index`. Every algorithm, n, and d_m in
// that round shares it.
inline VertexId draw_depot(std::uint64_t depot_seed, std::size_t map_index, int round,
                           const HeatGraph& g) {
  Rng rng(mix_seed(mix_seed(depot_seed, map_index), static_cast<std::uint64_t>(round)));
  return g.vertex(static_cast<std::size_t>(rng.below(g.size())));
}

inline std::vector<CellMean> aggregate_means(const std::vector<ReportRow>& rows,
                                             std::size_t target_count) {
  using Key = std::tuple<std::string, int, int, double>;
  std::map<Key, std::size_t> slot;
  std::vector<CellMean> means;
  for (const ReportRow& row : rows) {
    const Key key{row.map_id, static_cast<int>(row.algorithm), row.n, row.d_m};
    auto [it, inserted] = slot.try_emplace(key, means.size());
    if (inserted) {
      CellMean m;
      m.map_id = row.map_id;
      m.algorithm = row.algorithm;
      m.n = row.n;
      m.d_m = row.d_m;
      m.time_to_R.assign(target_count, std::nullopt);
      m.reached.assign(target_count, 0);
      means.push_back(std::move(m));
    }
    CellMean& m = means[it->second];
    ++m.rounds;
    m.sigma_count += static_cast<double>(row.sigma_count);
    m.sigma_pct += row.sigma_pct;
    m.R_total += row.R_total;
    m.makespan_s += row.makespan_s;
    for (std::size_t t = 0; t < target_count; ++t) {
      if (row.time_to_R[t]) {
        m.time_to_R[t] = m.time_to_R[t].value_or(0.0) + *row.time_to_R[t];
        ++m.reached[t];
      }
    }
  }
  for (CellMean& m : means) {
    const double k = m.rounds;
    m.sigma_count /= k;
    m.sigma_pct /= k;
    m.R_total /= k;
    m.makespan_s /= k;
    for (std::size_t t = 0; t < target_count; ++t) {
      if (m.time_to_R[t]) *m.time_to_R[t] /= m.reached[t];
    }
  }
  return means;
}

// Rows come out in matrix order (map, algorithm, n, d_m, round) whatever the
// worker count.
inline BenchResult run_experiment(const ExperimentSpec& spec, unsigned threads = 0) {
  spec.validate();
  std::vector<HeatGraph> graphs;
  for (const MapSource& src : spec.maps) {
    if (src.file) {
      graphs.push_back(build_heat_graph(load_heatmap_file(*src.file, spec.palette)));
    } else {
      graphs.push_back(build_heat_graph(
          random_heatmap(src.seed, src.width, src.height, spec.palette, spec.class_probs)));
    }
  }

  struct Job {
    std::size_t map;
    PlannerKind algorithm;
    int n;
    double d_m;
    int round;
  };
  std::vector<Job> jobs;
  for (std::size_t m = 0; m < spec.maps.size(); ++m) {
    for (PlannerKind a : spec.algorithms) {
      for (int n : spec.n_values) {
        for (double d_m : spec.d_m_values) {
          for (int r = 0; r < spec.rounds; ++r) jobs.push_back({m, a, n, d_m, r});
        }
      }
    }
  }

  std::vector<ReportRow> rows(jobs.size());
  auto run_job = [&](std::size_t k) {
    const Job& job = jobs[k];
    const HeatGraph& g = graphs[job.map];
    const VertexId depot = draw_depot(spec.depot_seed, job.map, job.round, g);
    PlannerConfig cfg = spec.planner;
    cfg.n = job.n;
    cfg.d_m_total = job.d_m;
    cfg.per_uav_budget.reset();
    const MultiPlan plan = orchestrate_multi(job.algorithm, g, std::span(&depot, 1), cfg);
    const PlanMetrics metrics = evaluate(plan, g);
    ReportRow& row = rows[k];
    row.map_id = spec.maps[job.map].id();
    row.algorithm = job.algorithm;
    row.n = job.n;
    row.d_m = job.d_m;
    row.round = job.round;
    row.depot = depot;
    row.sigma_count = metrics.sigma_count;
    row.sigma_pct = metrics.sigma_pct;
    row.R_total = metrics.R_total;
    row.makespan_s = mission_time(plan, spec.time_model).makespan;
    row.time_to_R = times_to_reach(plan, g, spec.time_model, spec.time_targets);
  };

  if (threads == 0) threads = default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) run_job(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
          try {
            run_job(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
  }

  BenchResult result;
  result.means = aggregate_means(rows, spec.time_targets.size());
  result.rows = std::move(rows);
  return result;
}

// ---------------------------------------------------------------------------
// Output

inline std::string time_target_column(double target) {
  return "t_R" + format_shortest(target);
}

namespace detail {
inline std::string optional_fixed(const std::optional<double>& v) {
  return v ? format_fixed(*v) : std::string();
}
}  // namespace detail

// map_id,algorithm,n,d_m,round,depot_i,depot_j,sigma_count,sigma_pct,
// R_total,makespan_s[,t_R<target>...]; unreached targets are empty fields.
inline void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows,
                             const std::vector<double>& time_targets) {
  out << "map_id,algorithm,n,d_m,round,depot_i,depot_j,sigma_count,sigma_pct,R_total,makespan_s";
  for (double t : time_targets) out << ',' << time_target_column(t);
  out << '\n';
  for (const ReportRow& r : rows) {
    out << r.map_id << ',' << to_string(r.algorithm) << ',' << r.n << ','
        << format_shortest(r.d_m) << ',' << r.round << ',' << r.depot.i << ',' << r.depot.j
        << ',' << r.sigma_count << ',' << format_fixed(r.sigma_pct) << ','
        << format_fixed(r.R_total) << ',' << format_fixed(r.makespan_s);
    for (const auto& t : r.time_to_R) out << ',' << detail::optional_fixed(t);
    out << '\n';
  }
}

inline void write_means_csv(std::ostream& out, const std::vector<CellMean>& means,
                            const std::vector<double>& time_targets) {
  out << "map_id,algorithm,n,d_m,rounds,sigma_count,sigma_pct,R_total,makespan_s";
  for (double t : time_targets) out << ',' << time_target_column(t);
  out << '\n';
  for (const CellMean& m : means) {
    out << m.map_id << ',' << to_string(m.algorithm) << ',' << m.n << ','
        << format_shortest(m.d_m) << ',' << m.rounds << ',' << format_fixed(m.sigma_count)
        << ',' << format_fixed(m.sigma_pct) << ',' << format_fixed(m.R_total) << ','
        << format_fixed(m.makespan_s);
    for (const auto& t : m.time_to_R) out << ',' << detail::optional_fixed(t);
    out << '\n';
  }
}

// Text table of mean sigma / sum R shaped like the usual results table: one
// block per n, one row per algorithm, one column pair per (map, d_m).
// Time targets, when present, get a second block of mean times ("/" when no
// round reached the target).
inline void write_summary(std::ostream& out, const std::vector<CellMean>& means,
                          const std::vector<double>& time_targets) {
  std::vector<int> ns;
  std::vector<PlannerKind> algos;
  std::vector<std::pair<std::string, double>> columns;
  for (const CellMean& m : means) {
    if (std::find(ns.begin(), ns.end(), m.n) == ns.end()) ns.push_back(m.n);
    if (std::find(algos.begin(), algos.end(), m.algorithm) == algos.end()) algos.push_back(m.algorithm);
  }
  auto find = [&](const std::string& map, PlannerKind a, int n, double d_m) -> const CellMean* {
    for (const CellMean& m : means) {
      if (m.map_id == map && m.algorithm == a && m.n == n && m.d_m == d_m) return &m;
    }
    return nullptr;
  };
  auto cell = [](const std::string& s, int w) {
    std::ostringstream os;
    os << std::setw(w) << s;
    return os.str();
  };
  for (int n : ns) {
    columns.clear();
    for (const CellMean& m : means) {
      if (m.n != n) continue;
      std::pair<std::string, double> c{m.map_id, m.d_m};
      if (std::find(columns.begin(), columns.end(), c) == columns.end()) columns.push_back(c);
    }
    out << "n=" << n << '\n';
    out << cell("", 12);
    for (const auto& [map, d_m] : columns) {
      out << " | " << cell(map + " d_m=" + format_shortest(d_m), 25);
    }
    out << '\n' << cell("", 12);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << " | " << cell("sigma", 12) << cell("sumR", 13);
    }
    out << '\n';
    for (PlannerKind a : algos) {
      out << cell(std::string(to_string(a)), 12);
      for (const auto& [map, d_m] : columns) {
        const CellMean* m = find(map, a, n, d_m);
        out << " | " << cell(m ? format_fixed(m->sigma_count, 1) : "-", 12)
            << cell(m ? format_fixed(m->R_total, 1) : "-", 13);
      }
      out << '\n';
    }
    if (!time_targets.empty()) {
      out << "time to accumulate R (s), n=" << n << '\n' << cell("", 12);
      for (double t : time_targets) out << " | " << cell("R=" + format_shortest(t), 9);
      out << '\n';
      for (PlannerKind a : algos) {
        for (const auto& [map, d_m] : columns) {
          const CellMean* m = find(map, a, n, d_m);
          if (!m) continue;
          out << cell(std::string(to_string(a)), 12);
          for (std::size_t t = 0; t < time_targets.size(); ++t) {
            out << " | " << cell(m->time_to_R[t] ? format_fixed(*m->time_to_R[t], 1) : "/", 9);
          }
          out << "   (" << map << " d_m=" << format_shortest(d_m) << ")\n";
        }
      }
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Experiment spec documents (JSON)
//
//   {
//     "maps": [{"random": {"seed": 1, "width": 50, "height": 50}},
//              {"file": "city.csv"}],
//     "algorithms": ["zigzag", "na-greedy", "heu-greedy", "svrec"],
//     "d_m": [250, 550], "n": [1, 6], "rounds": 20, "depot_seed": 0,
//     "time_targets": [200, 400, 600, 800],
//     "class_probs": [0.2, 0.2, 0.2, 0.2, 0.2],                    (optional)
//     "palette": [{"label": "water", "heat_value": 0.2}, ...],     (optional)
//     "time_model": {"speed": 15, "hover": 2, "cell_size": 40},    (optional)
//     "planner": {"r_th": 0, "r_min": 1, "penalty": 10, "vwrr_radius": 1}
//   }

inline ExperimentSpec experiment_from_json(const nlohmann::json& doc) {
  try {
    ExperimentSpec spec;
    if (doc.contains("palette")) {
      std::vector<PaletteEntry> entries;
      for (const auto& e : doc.at("palette")) {
        entries.push_back({e.at("label").get<std::string>(), e.at("heat_value").get<double>()});
      }
      spec.palette = ClassPalette(std::move(entries));
    }
    for (const auto& m : doc.at("maps")) {
      if (m.contains("file")) {
        spec.maps.push_back(MapSource::from_file(m.at("file").get<std::string>()));
      } else {
        const auto& r = m.at("random");
        spec.maps.push_back(MapSource::random(r.at("seed").get<std::uint64_t>(),
                                              r.at("width").get<int>(),
                                              r.at("height").get<int>()));
      }
    }
    if (doc.contains("algorithms")) {
      spec.algorithms.clear();
      for (const auto& a : doc.at("algorithms")) {
        const auto kind = parse_planner_kind(a.get<std::string>());
        if (!kind) throw ParseError("unknown algorithm '" + a.get<std::string>() + "'");
        spec.algorithms.push_back(*kind);
      }
    }
    spec.d_m_values = doc.at("d_m").get<std::vector<double>>();
    if (doc.contains("n")) spec.n_values = doc.at("n").get<std::vector<int>>();
    spec.rounds = doc.value("rounds", 1);
    spec.depot_seed = doc.value("depot_seed", std::uint64_t{0});
    if (doc.contains("time_targets")) {
      spec.time_targets = doc.at("time_targets").get<std::vector<double>>();
    }
    if (doc.contains("class_probs")) {
      spec.class_probs = doc.at("class_probs").get<std::vector<double>>();
    }
    if (doc.contains("time_model")) {
      const auto& t = doc.at("time_model");
      spec.time_model.speed = t.value("speed", spec.time_model.speed);
      spec.time_model.hover = t.value("hover", spec.time_model.hover);
      spec.time_model.cell_size = t.value("cell_size", spec.time_model.cell_size);
    }
    if (doc.contains("planner")) {
      const auto& p = doc.at("planner");
      spec.planner.r_th = p.value("r_th", spec.planner.r_th);
      spec.planner.r_min = p.value("r_min", spec.planner.r_min);
      spec.planner.penalty = p.value("penalty", spec.planner.penalty);
      spec.planner.vwrr_radius = p.value("vwrr_radius", spec.planner.vwrr_radius);
    }
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed experiment spec: ") + e.what());
  }
}

}  // namespace heatpath

#endif  // HEATPATH_BENCH_HPP_
