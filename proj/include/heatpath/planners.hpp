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

// Endurance-limited coverage planners on a HeatGraph.
//
// Four step policies share one fleet driver:
//   ZigZagPolicy     boustrophedon sweep of a horizontal row band per UAV.
//   NaGreedyPolicy   best uncovered neighbor; stops when boxed in.
//   HeuGreedyPolicy  covered neighbors stay eligible at r - penalty.
//   SvrecPolicy      greedy stepping, skip-jumps out of traps and sparse
//                    terrain, window look-ahead to break ties.
//
// The driver (run_fleet) advances UAVs in strict round-robin, one move per
// active UAV per round, against a single shared CLOSE set. A UAV's depot is
// covered at t = 0. A vertex adds its r only to the UAV that covers it first.
// A move whose cost exceeds the UAV's remaining budget is refused and the UAV
// terminates; moves are never partial.

#ifndef HEATPATH_PLANNERS_HPP_
#define HEATPATH_PLANNERS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "heatpath/error.hpp"
#include "heatpath/heatgraph.hpp"

namespace heatpath {

// Slack on budget comparisons, absorbing rounding in sums of sqrt(2).
inline constexpr double kBudgetEpsilon = 1e-9;

enum class PlannerKind { kZigZag, kNaGreedy, kHeuGreedy, kSvrec };

inline constexpr PlannerKind kAllPlanners[] = {
    PlannerKind::kZigZag, PlannerKind::kNaGreedy, PlannerKind::kHeuGreedy,
    PlannerKind::kSvrec};

inline std::string_view to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::kZigZag: return "zigzag";
    case PlannerKind::kNaGreedy: return "na-greedy";
    case PlannerKind::kHeuGreedy: return "heu-greedy";
    case PlannerKind::kSvrec: return "svrec";
  }
  return "?";
}

// Accepts both the long names and the CLI short forms (na, heu).
inline std::optional<PlannerKind> parse_planner_kind(std::string_view name) {
  if (name == "zigzag" || name == "zig-zag") return PlannerKind::kZigZag;
  if (name == "na" || name == "na-greedy") return PlannerKind::kNaGreedy;
  if (name == "heu" || name == "heu-greedy") return PlannerKind::kHeuGreedy;
  if (name == "svrec") return PlannerKind::kSvrec;
  return std::nullopt;
}

enum class MoveKind { kStep, kSkip };

inline std::string_view to_string(MoveKind kind) {
  return kind == MoveKind::kStep ? "step" : "skip";
}

enum class Termination {
  kBudget,    // next move unaffordable
  kTrap,      // no uncovered neighbor left (greedy dead end)
  kNoTarget,  // skip search found no uncovered vertex above r_th
  kComplete,  // sweep finished its band
};

inline std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kBudget: return "budget";
    case Termination::kTrap: return "trap";
    case Termination::kNoTarget: return "no-target";
    case Termination::kComplete: return "complete";
  }
  return "?";
}

inline std::optional<Termination> parse_termination(std::string_view s) {
  for (auto t : {Termination::kBudget, Termination::kTrap, Termination::kNoTarget,
                 Termination::kComplete}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

struct PlannerConfig {
  int n = 1;                               // fleet size
  double d_m_total = 0.0;                  // fleet endurance, grid units
  std::optional<double> per_uav_budget;    // default d_m_total / n
  double r_th = 0.0;                       // skip targets need r > r_th
  double r_min = 1.0;                      // sparse trigger on mean neighbor r
  double penalty = 10.0;                   // Heu-Greedy revisit penalty
  int vwrr_radius = 1;                     // tie-break window half-width

  double budget() const { return per_uav_budget.value_or(d_m_total / n); }

  void validate() const {
    if (n < 1) throw ArgumentError("fleet size n must be >= 1");
    if (!(d_m_total >= 0.0)) throw ArgumentError("d_m must be non-negative");
    if (!(budget() >= 0.0)) throw ArgumentError("per-UAV budget must be non-negative");
    if (!(penalty >= 0.0)) throw ArgumentError("penalty must be non-negative");
    if (vwrr_radius < 1) throw ArgumentError("vwrr_radius must be >= 1");
  }

  friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

struct Trajectory {
  int uav_index = 0;
  std::vector<VertexId> vertices;   // vertices[0] is the depot
  std::vector<MoveKind> moves;      // moves[k]: vertices[k] -> vertices[k+1]
  std::vector<bool> first_visit;    // this UAV covered vertices[k] first
  double d = 0.0;                   // accumulated edge weight
  double R = 0.0;                   // accumulated Eff-weight, first visits only
  Termination termination = Termination::kBudget;

  std::size_t first_visit_count() const {
    return static_cast<std::size_t>(std::count(first_visit.begin(), first_visit.end(), true));
  }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct MultiPlan {
  int rows = 0;
  int cols = 0;
  PlannerKind planner = PlannerKind::kSvrec;
  PlannerConfig config;
  std::optional<std::uint64_t> seed;   // run metadata only
  std::vector<VertexId> depots;        // one per UAV
  std::vector<Trajectory> trajectories;
  std::vector<VertexId> close;         // covered vertices, row-major

  friend bool operator==(const MultiPlan&, const MultiPlan&) = default;
};

// Path length of a vertex sequence, summed front to back.
inline double path_length(std::span<const VertexId> vertices) {
  double d = 0.0;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    d += edge_weight(vertices[k - 1], vertices[k]);
  }
  return d;
}

inline bool fits_budget(double spent, double cost, double budget) {
  return spent + cost <= budget + kBudgetEpsilon;
}

// What a policy sees of one UAV.
struct UavState {
  int index = 0;
  VertexId position;
  double spent = 0.0;
  double budget = 0.0;

  bool can_afford(double cost) const { return fits_budget(spent, cost, budget); }
};

// A policy either names the next vertex or stops the UAV.
using Decision = std::variant<VertexId, Termination>;

// ---------------------------------------------------------------------------
// Zig-Zag

// Rows split into n contiguous bands whose sizes differ by at most one; the
// first rows % n bands take the extra row. Returns [begin, end) per UAV.
inline std::vector<std::pair<int, int>> row_bands(int rows, int n) {
  std::vector<std::pair<int, int>> bands;
  const int base = rows / n;
  const int extra = rows % n;
  int begin = 0;
  for (int k = 0; k < n; ++k) {
    const int size = base + (k < extra ? 1 : 0);
    bands.emplace_back(begin, begin + size);
    begin += size;
  }
  return bands;
}

// Shortest 8-neighbor walk from `from` to `to`: diagonal moves while both
// coordinates differ, then straight. Excludes `from`, includes `to`.
inline void append_walk(VertexId from, VertexId to, std::vector<VertexId>& out) {
  VertexId p = from;
  while (p != to) {
    p.i += (to.i > p.i) - (to.i < p.i);
    p.j += (to.j > p.j) - (to.j < p.j);
    out.push_back(p);
  }
}

// Full sweep of band [begin, end) for a UAV starting at `depot`, excluding
// the depot itself. The UAV walks to the band cell nearest its depot (same
// column, row clamped into the band), sweeps that row rightwards, snakes down
// to the band's last row, then walks to the unswept remainder (the left part
// of the entry row and the rows above it) and snakes upward through it.
inline std::vector<VertexId> zigzag_tour(int cols, int begin, int end, VertexId depot) {
  std::vector<VertexId> tour;
  if (begin >= end) return tour;
  const VertexId entry{std::clamp(depot.i, begin, end - 1), depot.j};
  append_walk(depot, entry, tour);

  VertexId at = entry;
  auto sweep_row = [&](int row, int from_col, int to_col) {
    const int step = to_col >= from_col ? 1 : -1;
    for (int j = from_col;; j += step) {
      const VertexId v{row, j};
      if (v != at) {
        append_walk(at, v, tour);
        at = v;
      }
      if (j == to_col) break;
    }
  };

  // Entry row to the right edge, then rows below, alternating direction.
  sweep_row(entry.i, entry.j, cols - 1);
  bool rightwards = false;
  for (int row = entry.i + 1; row < end; ++row) {
    if (rightwards) {
      sweep_row(row, 0, cols - 1);
    } else {
      sweep_row(row, cols - 1, 0);
    }
    rightwards = !rightwards;
  }

  // Remainder: left part of the entry row, then rows above it.
  int row = entry.i;
  if (entry.j > 0) {
    sweep_row(entry.i, entry.j - 1, 0);
    rightwards = true;
    --row;
  } else {
    --row;
    rightwards = at.j < cols - 1 - at.j;  // start from the nearer end
  }
  for (; row >= begin; --row) {
    if (rightwards) {
      sweep_row(row, 0, cols - 1);
    } else {
      sweep_row(row, cols - 1, 0);
    }
    rightwards = !rightwards;
  }
  return tour;
}

class ZigZagPolicy {
 public:
  ZigZagPolicy(const HeatGraph& g, std::span<const VertexId> depots) {
    const auto bands = row_bands(g.rows(), static_cast<int>(depots.size()));
    for (std::size_t k = 0; k < depots.size(); ++k) {
      tours_.push_back(zigzag_tour(g.cols(), bands[k].first, bands[k].second, depots[k]));
    }
    cursor_.assign(depots.size(), 0);
  }

  Decision propose(const HeatGraph&, const CoverSet&, const UavState& uav,
                   const PlannerConfig&) {
    auto& cursor = cursor_[uav.index];
    const auto& tour = tours_[uav.index];
    if (cursor >= tour.size()) return Termination::kComplete;
    return tour[cursor];
  }

  void on_move(int uav) { ++cursor_[uav]; }

 private:
  std::vector<std::vector<VertexId>> tours_;
  std::vector<std::size_t> cursor_;
};

// ---------------------------------------------------------------------------
// Na-Greedy: uncovered affordable neighbor with maximal r, row-major ties.

class NaGreedyPolicy {
 public:
  Decision propose(const HeatGraph& g, const CoverSet& close, const UavState& uav,
                   const PlannerConfig&) const {
    std::optional<VertexId> best;
    bool any_uncovered = false;
    for (const VertexId n : neighbors8(g, uav.position)) {
      if (close.contains(n)) continue;
      any_uncovered = true;
      if (!uav.can_afford(edge_weight(uav.position, n))) continue;
      if (!best || g.r(n) > g.r(*best)) best = n;
    }
    if (best) return *best;
    return any_uncovered ? Termination::kBudget : Termination::kTrap;
  }

  void on_move(int) {}
};

// ---------------------------------------------------------------------------
// Heu-Greedy: every affordable neighbor is a candidate; covered ones score
// r - penalty. Ties prefer uncovered, then row-major.

class HeuGreedyPolicy {
 public:
  Decision propose(const HeatGraph& g, const CoverSet& close, const UavState& uav,
                   const PlannerConfig& cfg) const {
    const auto neighbors = neighbors8(g, uav.position);
    if (neighbors.empty()) return Termination::kTrap;
    std::optional<VertexId> best;
    double best_score = 0.0;
    bool best_uncovered = false;
    for (const VertexId n : neighbors) {
      if (!uav.can_afford(edge_weight(uav.position, n))) continue;
      const bool uncovered = !close.contains(n);
      const double score = uncovered ? g.r(n) : g.r(n) - cfg.penalty;
      if (!best || score > best_score || (score == best_score && uncovered && !best_uncovered)) {
        best = n;
        best_score = score;
        best_uncovered = uncovered;
      }
    }
    if (best) return *best;
    return Termination::kBudget;
  }

  void on_move(int) {}
};

// ---------------------------------------------------------------------------
// SVReC

// Mean r of the uncovered vertices in the (2*radius+1)^2 window centred on
// `center`, clipped to the map. 0 when every window vertex is covered.
inline double window_mean_uncovered(const HeatGraph& g, const CoverSet& close,
                                    VertexId center, int radius) {
  double sum = 0.0;
  int count = 0;
  for (int i = std::max(0, center.i - radius); i <= std::min(g.rows() - 1, center.i + radius); ++i) {
    for (int j = std::max(0, center.j - radius); j <= std::min(g.cols() - 1, center.j + radius); ++j) {
      const VertexId v{i, j};
      if (close.contains(v)) continue;
      sum += g.r(v);
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / count;
}

class SvrecPolicy {
 public:
  Decision propose(const HeatGraph& g, const CoverSet& close, const UavState& uav,
                   const PlannerConfig& cfg) const {
    std::vector<VertexId> candidates;
    double sum = 0.0;
    for (const VertexId n : neighbors8(g, uav.position)) {
      if (close.contains(n)) continue;
      candidates.push_back(n);
      sum += g.r(n);
    }

    // Trap / interference (nothing uncovered nearby) or sparse terrain:
    // skip straight to the nearest worthwhile vertex.
    if (candidates.empty() || sum / static_cast<double>(candidates.size()) < cfg.r_min) {
      auto target = nearest_above_threshold(g, uav.position, close, cfg.r_th);
      if (!target) return Termination::kNoTarget;
      return *target;
    }

    double best_r = g.r(candidates.front());
    for (const VertexId c : candidates) best_r = std::max(best_r, g.r(c));
    std::vector<VertexId> tied;
    for (const VertexId c : candidates) {
      if (g.r(c) == best_r) tied.push_back(c);
    }
    if (tied.size() == 1) return tied.front();

    // Redundancy: look ahead at each tied candidate's neighborhood.
    VertexId pick = tied.front();
    double pick_score = window_mean_uncovered(g, close, pick, cfg.vwrr_radius);
    for (std::size_t k = 1; k < tied.size(); ++k) {
      const double score = window_mean_uncovered(g, close, tied[k], cfg.vwrr_radius);
      if (score > pick_score) {
        pick = tied[k];
        pick_score = score;
      }
    }
    return pick;
  }

  void on_move(int) {}
};

// ---------------------------------------------------------------------------
// Fleet driver

// Expands a depot list of size 1 to n entries and bounds-checks it.
inline std::vector<VertexId> fleet_depots(const HeatGraph& g, std::span<const VertexId> depots,
                                          int n) {
  if (depots.size() != 1 && depots.size() != static_cast<std::size_t>(n)) {
    throw ArgumentError("expected 1 or " + std::to_string(n) + " depots, got " +
                        std::to_string(depots.size()));
  }
  for (const VertexId d : depots) {
    if (!g.contains(d)) {
      throw ArgumentError("depot " + to_string(d) + " is outside the " +
                          std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " map");
    }
  }
  if (depots.size() == 1) return std::vector<VertexId>(static_cast<std::size_t>(n), depots[0]);
  return {depots.begin(), depots.end()};
}

template <class Policy>
MultiPlan run_fleet(const HeatGraph& g, std::span<const VertexId> depot_list,
                    const PlannerConfig& cfg, PlannerKind kind, Policy& policy) {
  const auto depots = fleet_depots(g, depot_list, cfg.n);
  const double budget = cfg.budget();

  MultiPlan plan;
  plan.rows = g.rows();
  plan.cols = g.cols();
  plan.planner = kind;
  plan.config = cfg;
  plan.config.per_uav_budget = budget;
  plan.depots = depots;

  CoverSet close(g);
  std::vector<UavState> uavs;
  std::vector<bool> active(depots.size(), true);
  for (std::size_t k = 0; k < depots.size(); ++k) {
    Trajectory t;
    t.uav_index = static_cast<int>(k);
    t.vertices.push_back(depots[k]);
    const bool first = close.insert(depots[k]);
    t.first_visit.push_back(first);
    if (first) t.R += g.r(depots[k]);
    plan.trajectories.push_back(std::move(t));
    uavs.push_back({static_cast<int>(k), depots[k], 0.0, budget});
  }

  std::size_t remaining = depots.size();
  while (remaining > 0) {
    for (std::size_t k = 0; k < uavs.size(); ++k) {
      if (!active[k]) continue;
      UavState& uav = uavs[k];
      Trajectory& t = plan.trajectories[k];
      const Decision decision = policy.propose(g, close, uav, cfg);
      std::optional<Termination> stop;
      if (const auto* reason = std::get_if<Termination>(&decision)) {
        stop = *reason;
      } else {
        const VertexId next = std::get<VertexId>(decision);
        const double cost = edge_weight(uav.position, next);
        if (!uav.can_afford(cost)) {
          stop = Termination::kBudget;
        } else {
          t.moves.push_back(adjacent8(uav.position, next) ? MoveKind::kStep : MoveKind::kSkip);
          t.vertices.push_back(next);
          const bool first = close.insert(next);
          t.first_visit.push_back(first);
          if (first) t.R += g.r(next);
          t.d += cost;
          uav.spent = t.d;
          uav.position = next;
          policy.on_move(static_cast<int>(k));
        }
      }
      if (stop) {
        t.termination = *stop;
        active[k] = false;
        --remaining;
      }
    }
  }
  plan.close = close.to_vector();
  return plan;
}

inline MultiPlan orchestrate_multi(PlannerKind kind, const HeatGraph& g,
                                   std::span<const VertexId> depots, const PlannerConfig& cfg) {
  cfg.validate();
  // Bounds and count are checked before any policy looks at the depots.
  const auto fleet = fleet_depots(g, depots, cfg.n);
  switch (kind) {
    case PlannerKind::kZigZag: {
      ZigZagPolicy policy(g, fleet);
      return run_fleet(g, fleet, cfg, kind, policy);
    }
    case PlannerKind::kNaGreedy: {
      NaGreedyPolicy policy;
      return run_fleet(g, fleet, cfg, kind, policy);
    }
    case PlannerKind::kHeuGreedy: {
      HeuGreedyPolicy policy;
      return run_fleet(g, fleet, cfg, kind, policy);
    }
    case PlannerKind::kSvrec: {
      SvrecPolicy policy;
      return run_fleet(g, fleet, cfg, kind, policy);
    }
  }
  throw ArgumentError("unknown planner kind");
}

inline MultiPlan plan_zigzag(const HeatGraph& g, VertexId depot, const PlannerConfig& cfg) {
  return orchestrate_multi(PlannerKind::kZigZag, g, std::span(&depot, 1), cfg);
}
inline MultiPlan plan_na_greedy(const HeatGraph& g, VertexId depot, const PlannerConfig& cfg) {
  return orchestrate_multi(PlannerKind::kNaGreedy, g, std::span(&depot, 1), cfg);
}
inline MultiPlan plan_heu_greedy(const HeatGraph& g, VertexId depot, const PlannerConfig& cfg) {
  return orchestrate_multi(PlannerKind::kHeuGreedy, g, std::span(&depot, 1), cfg);
}
inline MultiPlan plan_svrec(const HeatGraph& g, VertexId depot, const PlannerConfig& cfg) {
  return orchestrate_multi(PlannerKind::kSvrec, g, std::span(&depot, 1), cfg);
}

// Recomputes first-visit attribution from the vertex lists alone. The driver
// is lockstep: round 0 places every depot in UAV order, and round k appends
// the k-th move of every UAV still active, so the global covering order is
// recoverable without a step log.
inline std::vector<std::vector<bool>> replay_first_visits(const MultiPlan& plan) {
  if (plan.rows < 1 || plan.cols < 1) throw ArgumentError("plan has no map dimensions");
  std::vector<unsigned char> seen(static_cast<std::size_t>(plan.rows) * plan.cols, 0);
  std::vector<std::vector<bool>> out(plan.trajectories.size());
  std::size_t longest = 0;
  for (const auto& t : plan.trajectories) longest = std::max(longest, t.vertices.size());
  for (std::size_t step = 0; step < longest; ++step) {
    for (std::size_t k = 0; k < plan.trajectories.size(); ++k) {
      const auto& vs = plan.trajectories[k].vertices;
      if (step >= vs.size()) continue;
      const VertexId v = vs[step];
      if (v.i < 0 || v.i >= plan.rows || v.j < 0 || v.j >= plan.cols) {
        throw IntegrityError("trajectory " + std::to_string(k) + " leaves the map at " +
                             to_string(v));
      }
      auto& bit = seen[static_cast<std::size_t>(v.i) * plan.cols + v.j];
      out[k].push_back(bit == 0);
      bit = 1;
    }
  }
  return out;
}

}  // namespace heatpath

#endif  // HEATPATH_PLANNERS_HPP_
