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

#ifndef HEATPATH_METRICS_HPP_
#define HEATPATH_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heatpath/error.hpp"
#include "heatpath/format.hpp"
#include "heatpath/heatgraph.hpp"
#include "heatpath/planners.hpp"

namespace heatpath {

inline constexpr double kIntegrityTolerance = 1e-9;

// Cruise speed, hover per newly covered cell, and the cell edge length.
struct TimeModel {
  double speed = 15.0;       // m/s
  double hover = 2.0;        // s
  double cell_size = 40.0;   // m

  void validate() const {
    if (!(speed > 0.0) || !(hover > 0.0) || !(cell_size > 0.0)) {
      throw ArgumentError("time model parameters must be strictly positive");
    }
  }
};

struct PlanMetrics {
  std::int64_t sigma_count = 0;       // covered vertices
  double sigma_pct = 0.0;             // 100 * sigma_count / (rows * cols)
  double R_total = 0.0;
  std::vector<double> d_per_uav;
  std::optional<double> time_to_R;
};

// Recomputes everything from the vertex lists and cross-checks the stored
// values: per-UAV d, the CLOSE set, and per-UAV first-visit R.
inline PlanMetrics evaluate(const MultiPlan& plan, const HeatGraph& g) {
  if (plan.rows != g.rows() || plan.cols != g.cols()) {
    throw ArgumentError("plan is " + std::to_string(plan.rows) + "x" + std::to_string(plan.cols) +
                        " but graph is " + std::to_string(g.rows()) + "x" +
                        std::to_string(g.cols()));
  }
  const auto attribution = replay_first_visits(plan);
  CoverSet close(g);
  PlanMetrics m;
  double stored_R = 0.0;
  for (std::size_t k = 0; k < plan.trajectories.size(); ++k) {
    const Trajectory& t = plan.trajectories[k];
    const double d = path_length(t.vertices);
    if (std::abs(d - t.d) > kIntegrityTolerance) {
      throw IntegrityError("UAV " + std::to_string(k) + ": stored d " + format_shortest(t.d) +
                           " but path length is " + format_shortest(d));
    }
    double R = 0.0;
    for (std::size_t s = 0; s < t.vertices.size(); ++s) {
      close.insert(t.vertices[s]);
      if (attribution[k][s]) R += g.r(t.vertices[s]);
    }
    if (std::abs(R - t.R) > kIntegrityTolerance) {
      throw IntegrityError("UAV " + std::to_string(k) + ": stored R " + format_shortest(t.R) +
                           " but first-visit sum is " + format_shortest(R));
    }
    stored_R += t.R;
    m.d_per_uav.push_back(d);
  }
  if (close.to_vector() != plan.close) {
    throw IntegrityError("stored CLOSE set differs from the union of trajectories");
  }
  m.sigma_count = static_cast<std::int64_t>(close.count());
  m.sigma_pct = 100.0 * static_cast<double>(m.sigma_count) / static_cast<double>(g.size());
  for (const VertexId v : plan.close) m.R_total += g.r(v);
  if (std::abs(m.R_total - stored_R) > kIntegrityTolerance) {
    throw IntegrityError("sum of trajectory R differs from R over CLOSE");
  }
  return m;
}

struct MissionTime {
  std::vector<double> per_uav;   // seconds
  double makespan = 0.0;
};

// Travel at cruise speed over the whole path (skip-jumps included) plus one
// hover per first-visit covering. Revisits cost travel only.
inline MissionTime mission_time(const MultiPlan& plan, const TimeModel& tm) {
  tm.validate();
  MissionTime out;
  for (const Trajectory& t : plan.trajectories) {
    const double seconds = t.d * tm.cell_size / tm.speed +
                           tm.hover * static_cast<double>(t.first_visit_count());
    out.per_uav.push_back(seconds);
    out.makespan = std::max(out.makespan, seconds);
  }
  return out;
}

// Fleet-wide R as a step function of wall-clock time: every UAV launches at
// t = 0, and a covering adds its r when the hover over that cell completes.
// Returns the sorted (time, r) events.
inline std::vector<std::pair<double, double>> coverage_events(const MultiPlan& plan,
                                                              const HeatGraph& g,
                                                              const TimeModel& tm) {
  tm.validate();
  std::vector<std::pair<double, double>> events;
  for (const Trajectory& t : plan.trajectories) {
    double clock = 0.0;
    for (std::size_t s = 0; s < t.vertices.size(); ++s) {
      if (s > 0) clock += edge_weight(t.vertices[s - 1], t.vertices[s]) * tm.cell_size / tm.speed;
      if (s < t.first_visit.size() && t.first_visit[s]) {
        clock += tm.hover;
        events.emplace_back(clock, g.r(t.vertices[s]));
      }
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return events;
}

// Earliest time at which cumulative fleet R reaches R_target; nullopt when
// the plan never gets there.
inline std::optional<double> time_to_reach_R(const MultiPlan& plan, const HeatGraph& g,
                                             const TimeModel& tm, double R_target) {
  if (!(R_target > 0.0)) throw ArgumentError("R_target must be positive");
  double acc = 0.0;
  for (const auto& [time, r] : coverage_events(plan, g, tm)) {
    acc += r;
    if (acc >= R_target) return time;
  }
  return std::nullopt;
}

inline std::vector<std::optional<double>> times_to_reach(const MultiPlan& plan, const HeatGraph& g,
                                                         const TimeModel& tm,
                                                         std::span<const double> targets) {
  for (double target : targets) {
    if (!(target > 0.0)) throw ArgumentError("R targets must be positive");
  }
  const auto events = coverage_events(plan, g, tm);
  std::vector<std::optional<double>> out;
  for (double target : targets) {
    double acc = 0.0;
    std::optional<double> hit;
    for (const auto& [time, r] : events) {
      acc += r;
      if (acc >= target) {
        hit = time;
        break;
      }
    }
    out.push_back(hit);
  }
  return out;
}

}  // namespace heatpath

#endif  // HEATPATH_METRICS_HPP_
