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

#ifndef HEATPATH_HEATPATH_HPP_
#define HEATPATH_HEATPATH_HPP_

#include "heatpath/bench.hpp"
#include "heatpath/error.hpp"
#include "heatpath/format.hpp"
#include "heatpath/heatgraph.hpp"
#include "heatpath/heatmap.hpp"
#include "heatpath/metrics.hpp"
#include "heatpath/plan_io.hpp"
#include "heatpath/planners.hpp"
#include "heatpath/render.hpp"
#include "heatpath/rng.hpp"

#endif  // HEATPATH_HEATPATH_HPP_
