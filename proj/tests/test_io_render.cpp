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

#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "heatpath/heatmap.hpp"
#include "heatpath/metrics.hpp"
#include "heatpath/plan_io.hpp"
#include "heatpath/render.hpp"
#include "heatpath/rng.hpp"

namespace heatpath {
namespace {

const ClassPalette kPalette = ClassPalette::default_palette();

PlannerConfig budget_of(double d_m, int n = 1) {
  PlannerConfig cfg;
  cfg.n = n;
  cfg.d_m_total = d_m;
  return cfg;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(PlanIoTest, RoundTripReplaysIdentically) {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const HeatGraph g = build_heat_graph(random_heatmap(rng.next_u64(), 30, 20, kPalette));
    const int n = 1 + static_cast<int>(rng.below(6));
    const PlannerKind kind = kAllPlanners[rng.below(4)];
    std::vector<VertexId> depots;
    for (int k = 0; k < n; ++k) depots.push_back(g.vertex(rng.below(g.size())));
    MultiPlan plan = orchestrate_multi(kind, g, depots, budget_of(240, n));
    if (trial % 2 == 0) plan.seed = rng.next_u64();

    const std::string text = plan_to_string(plan);
    const MultiPlan back = read_plan_string(text);
    EXPECT_EQ(back, plan);
    EXPECT_EQ(plan_to_string(back), text);

    const PlanMetrics a = evaluate(plan, g);
    const PlanMetrics b = evaluate(back, g);
    EXPECT_EQ(a.sigma_count, b.sigma_count);
    EXPECT_EQ(a.R_total, b.R_total);
    EXPECT_EQ(a.d_per_uav, b.d_per_uav);
    EXPECT_EQ(mission_time(plan, TimeModel{}).makespan, mission_time(back, TimeModel{}).makespan);
  }
}

TEST(PlanIoTest, SortedKeysAndExtraFieldsIgnored) {
  const HeatGraph g(1, 3, {0, 4, 10});
  const MultiPlan plan = plan_na_greedy(g, {0, 1}, budget_of(2));
  nlohmann::json doc = plan_to_json(plan);
  const std::string text = doc.dump();
  EXPECT_LT(text.find("\"close\""), text.find("\"cols\""));
  EXPECT_LT(text.find("\"planner\""), text.find("\"trajectories\""));
  doc["stamp"] = "2026-01-01T00:00:00Z";
  EXPECT_EQ(plan_from_json(doc), plan);
}

TEST(PlanIoTest, MalformedDocuments) {
  EXPECT_THROW(read_plan_string("not json"), ParseError);
  EXPECT_THROW(read_plan_string("[]"), ParseError);
  EXPECT_THROW(read_plan_string(R"({"format": "other/9"})"), ParseError);

  const HeatGraph g(1, 3, {0, 4, 10});
  nlohmann::json doc = plan_to_json(plan_na_greedy(g, {0, 1}, budget_of(2)));
  doc["trajectories"][0]["moves"] = nlohmann::json::array({"step", "step"});
  EXPECT_THROW(plan_from_json(doc), ParseError);
  doc = plan_to_json(plan_na_greedy(g, {0, 1}, budget_of(2)));
  doc["planner"] = "teleport";
  EXPECT_THROW(plan_from_json(doc), ParseError);
  doc = plan_to_json(plan_na_greedy(g, {0, 1}, budget_of(2)));
  doc.erase("rows");
  EXPECT_THROW(plan_from_json(doc), ParseError);
  EXPECT_THROW(read_plan_file("/nonexistent/plan.json"), IoError);
}

TEST(RenderTest, DepotOnlyPlan) {
  const Heatmap map = load_heatmap("0.2,0.4,0.6\n0.8,1.0,0.2\n0.4,0.6,0.8\n", kPalette);
  const HeatGraph g = build_heat_graph(map);
  const MultiPlan plan = plan_svrec(g, {1, 1}, budget_of(0));
  const std::string svg = render_svg(map, plan, kPalette);
  EXPECT_EQ(count_of(svg, "<rect class=\"cell\""), 9u);
  EXPECT_EQ(count_of(svg, "<circle class=\"depot\""), 1u);
  EXPECT_EQ(count_of(svg, "<polyline"), 0u);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(RenderTest, SkipIsTheOnlyDashedSegment) {
  const Heatmap map = load_heatmap("0.2,0.2,0.2,0.2,1.0,0.8\n", kPalette);
  const HeatGraph g = build_heat_graph(map);
  const MultiPlan plan = plan_svrec(g, {0, 0}, budget_of(5));
  ASSERT_EQ(plan.trajectories[0].moves,
            (std::vector<MoveKind>{MoveKind::kSkip, MoveKind::kStep}));
  const std::string svg = render_svg(map, plan, kPalette);
  EXPECT_EQ(count_of(svg, "stroke-dasharray"), 1u);
  EXPECT_EQ(count_of(svg, "<line class=\"skip uav-0\""), 1u);
  EXPECT_EQ(count_of(svg, "<polyline class=\"path uav-0\""), 1u);
}

TEST(RenderTest, SharedDepotDrawnOnceAndColorsDistinct) {
  const Heatmap map = random_heatmap(4, 12, 12, kPalette);
  const HeatGraph g = build_heat_graph(map);
  const MultiPlan plan = orchestrate_multi(PlannerKind::kZigZag, g,
                                           std::vector<VertexId>{{0, 0}}, budget_of(120, 10));
  const std::string svg = render_svg(map, plan, kPalette);
  EXPECT_EQ(count_of(svg, "<circle class=\"depot\""), 1u);
  RenderStyle style;
  EXPECT_NE(style.path_color(8), style.path_color(9));
  EXPECT_NE(style.path_color(0), style.path_color(8));
}

TEST(RenderTest, DimensionMismatch) {
  const Heatmap three = load_heatmap("0.2,0.2,0.2\n0.2,0.2,0.2\n0.2,0.2,0.2\n", kPalette);
  const Heatmap four = random_heatmap(1, 4, 4, kPalette);
  const MultiPlan plan = plan_zigzag(build_heat_graph(three), {0, 0}, budget_of(3));
  EXPECT_THROW(render_svg(four, plan, kPalette), ArgumentError);
  RenderStyle tiny;
  tiny.cell_pixels = 1;
  EXPECT_THROW(render_svg(three, plan, kPalette, tiny), ArgumentError);
}

}  // namespace
}  // namespace heatpath
