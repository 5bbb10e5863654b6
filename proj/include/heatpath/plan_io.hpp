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

// MultiPlan <-> JSON document. Keys are emitted in sorted order and reals
// with shortest round-trip precision, so a plan serializes to the same bytes
// on every run and reloads bit-exact.
//
//   {
//     "cols": 20, "rows": 19,
//     "close": [[0,0],[0,1],...],
//     "config": {"d_m_total": 90.0, "n": 1, "penalty": 10.0,
//                "per_uav_budget": 90.0, "r_min": 1.0, "r_th": 0.0,
//                "vwrr_radius": 1},
//     "depots": [[0,0]],
//     "format": "heatpath-plan/1",
//     "planner": "svrec",
//     "seed": 7,                      (optional)
//     "stamp": "...",                 (optional, CLI --stamp)
//     "trajectories": [
//       {"R": 14.0, "d": 1.0, "moves": ["step"], "termination": "trap",
//        "uav": 0, "vertices": [[0,1],[0,2]]}
//     ]
//   }
//
// First-visit flags are not stored; they are recomputed on load by replaying
// the lockstep schedule.

#ifndef HEATPATH_PLAN_IO_HPP_
#define HEATPATH_PLAN_IO_HPP_

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "heatpath/error.hpp"
#include "heatpath/planners.hpp"

namespace heatpath {

inline constexpr const char* kPlanFormat = "heatpath-plan/1";

namespace detail {

inline nlohmann::json vertex_to_json(VertexId v) { return nlohmann::json::array({v.i, v.j}); }

inline VertexId vertex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ParseError("vertex must be a [row, col] integer pair, got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

inline std::vector<VertexId> vertices_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vertices");
  std::vector<VertexId> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(vertex_from_json(v));
  return out;
}

}  // namespace detail

inline nlohmann::json plan_to_json(const MultiPlan& plan) {
  using nlohmann::json;
  json doc;
  doc["format"] = kPlanFormat;
  doc["rows"] = plan.rows;
  doc["cols"] = plan.cols;
  doc["planner"] = std::string(to_string(plan.planner));
  if (plan.seed) doc["seed"] = *plan.seed;
  const PlannerConfig& c = plan.config;
  doc["config"] = {{"n", c.n},
                   {"d_m_total", c.d_m_total},
                   {"per_uav_budget", c.budget()},
                   {"r_th", c.r_th},
                   {"r_min", c.r_min},
                   {"penalty", c.penalty},
                   {"vwrr_radius", c.vwrr_radius}};
  json depots = json::array();
  for (const VertexId d : plan.depots) depots.push_back(detail::vertex_to_json(d));
  doc["depots"] = depots;
  json close = json::array();
  for (const VertexId v : plan.close) close.push_back(detail::vertex_to_json(v));
  doc["close"] = close;
  json trajectories = json::array();
  for (const Trajectory& t : plan.trajectories) {
    json vs = json::array();
    for (const VertexId v : t.vertices) vs.push_back(detail::vertex_to_json(v));
    json moves = json::array();
    for (const MoveKind m : t.moves) moves.push_back(std::string(to_string(m)));
    trajectories.push_back({{"uav", t.uav_index},
                            {"vertices", vs},
                            {"moves", moves},
                            {"d", t.d},
                            {"R", t.R},
                            {"termination", std::string(to_string(t.termination))}});
  }
  doc["trajectories"] = trajectories;
  return doc;
}

inline MultiPlan plan_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("plan document must be a JSON object");
    if (doc.value("format", std::string()) != kPlanFormat) {
      throw ParseError(std::string("unsupported plan format, expected ") + kPlanFormat);
    }
    MultiPlan plan;
    plan.rows = doc.at("rows").get<int>();
    plan.cols = doc.at("cols").get<int>();
    const auto kind = parse_planner_kind(doc.at("planner").get<std::string>());
    if (!kind) throw ParseError("unknown planner '" + doc.at("planner").get<std::string>() + "'");
    plan.planner = *kind;
    if (doc.contains("seed")) plan.seed = doc.at("seed").get<std::uint64_t>();
    const auto& c = doc.at("config");
    plan.config.n = c.at("n").get<int>();
    plan.config.d_m_total = c.at("d_m_total").get<double>();
    plan.config.per_uav_budget = c.at("per_uav_budget").get<double>();
    plan.config.r_th = c.at("r_th").get<double>();
    plan.config.r_min = c.at("r_min").get<double>();
    plan.config.penalty = c.at("penalty").get<double>();
    plan.config.vwrr_radius = c.at("vwrr_radius").get<int>();
    plan.depots = detail::vertices_from_json(doc.at("depots"));
    plan.close = detail::vertices_from_json(doc.at("close"));
    for (const auto& tj : doc.at("trajectories")) {
      Trajectory t;
      t.uav_index = tj.at("uav").get<int>();
      t.vertices = detail::vertices_from_json(tj.at("vertices"));
      if (t.vertices.empty()) throw ParseError("trajectory without vertices");
      for (const auto& m : tj.at("moves")) {
        const auto s = m.get<std::string>();
        if (s == "step") {
          t.moves.push_back(MoveKind::kStep);
        } else if (s == "skip") {
          t.moves.push_back(MoveKind::kSkip);
        } else {
          throw ParseError("unknown move kind '" + s + "'");
        }
      }
      if (t.moves.size() + 1 != t.vertices.size()) {
        throw ParseError("trajectory " + std::to_string(t.uav_index) +
                         ": move count does not match vertex count");
      }
      t.d = tj.at("d").get<double>();
      t.R = tj.at("R").get<double>();
      const auto term = parse_termination(tj.at("termination").get<std::string>());
      if (!term) throw ParseError("unknown termination '" + tj.at("termination").dump() + "'");
      t.termination = *term;
      plan.trajectories.push_back(std::move(t));
    }
    const auto flags = replay_first_visits(plan);
    for (std::size_t k = 0; k < plan.trajectories.size(); ++k) {
      plan.trajectories[k].first_visit = flags[k];
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan document: ") + e.what());
  }
}

inline void write_plan(std::ostream& out, const MultiPlan& plan) {
  out << plan_to_json(plan).dump(1) << '\n';
}

inline std::string plan_to_string(const MultiPlan& plan) {
  std::ostringstream out;
  write_plan(out, plan);
  return out.str();
}

inline MultiPlan read_plan(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("plan is not valid JSON: ") + e.what());
  }
  return plan_from_json(doc);
}

inline MultiPlan read_plan_string(const std::string& text) {
  std::istringstream in(text);
  return read_plan(in);
}

inline MultiPlan read_plan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open plan file '" + path.string() + "'");
  return read_plan(in);
}

}  // namespace heatpath

#endif  // HEATPATH_PLAN_IO_HPP_
