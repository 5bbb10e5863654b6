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

// Plans a 50x50 random map with every planner, one UAV and a fleet of six,
// and prints coverage, collected weight and mission time.

#include <iostream>
#include <vector>

#include "heatpath/heatpath.hpp"

int main() {
  using namespace heatpath;
  const ClassPalette palette = ClassPalette::default_palette();
  const Heatmap map = random_heatmap(7, 50, 50, palette);
  const HeatGraph g = build_heat_graph(map);
  const std::vector<VertexId> depot{{25, 25}};

  for (int n : {1, 6}) {
    PlannerConfig cfg;
    cfg.n = n;
    cfg.d_m_total = n == 1 ? 550.0 : 1050.0;
    std::cout << "n=" << n << " d_m=" << cfg.d_m_total << '\n';
    for (PlannerKind kind : kAllPlanners) {
      const MultiPlan plan = orchestrate_multi(kind, g, depot, cfg);
      const PlanMetrics m = evaluate(plan, g);
      const auto t400 = time_to_reach_R(plan, g, TimeModel{}, 400.0);
      std::cout << "  " << to_string(kind) << ": sigma=" << m.sigma_count
                << " R=" << format_fixed(m.R_total, 1)
                << " makespan=" << format_fixed(mission_time(plan, TimeModel{}).makespan, 1) << "s"
                << " t(R=400)=" << (t400 ? format_fixed(*t400, 1) + "s" : std::string("/"))
                << '\n';
    }
  }
  return 0;
}
