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

// The Heat-Graph: one vertex per heatmap cell carrying an Eff-weight r,
// implicit 8-neighborhood edges, and the Euclidean lattice metric.

#ifndef HEATPATH_HEATGRAPH_HPP_
#define HEATPATH_HEATGRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "heatpath/error.hpp"
#include "heatpath/heatmap.hpp"

namespace heatpath {

// Grid position (row i, column j). Ordering is row-major, which is also the
// tie-break order used by every planner.
struct VertexId {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_string(VertexId v) {
  return "(" + std::to_string(v.i) + ", " + std::to_string(v.j) + ")";
}

// Eff-weight of a heat-value: 10 for the top class, 10h - 2 otherwise.
inline double eff_weight(double heat_value) {
  return heat_value == 1.0 ? 10.0 : 10.0 * heat_value - 2.0;
}

class HeatGraph {
 public:
  HeatGraph(int rows, int cols, std::vector<double> r,
            double cell_size = kDefaultCellSize)
      : rows_(rows), cols_(cols), cell_size_(cell_size), r_(std::move(r)) {
    if (rows < 1 || cols < 1) throw ArgumentError("heat graph dimensions must be positive");
    if (r_.size() != static_cast<std::size_t>(rows) * cols) {
      throw ArgumentError("heat graph weight count does not match dimensions");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double cell_size() const { return cell_size_; }
  std::size_t size() const { return r_.size(); }
  std::span<const double> weights() const { return r_; }

  bool contains(VertexId v) const {
    return v.i >= 0 && v.i < rows_ && v.j >= 0 && v.j < cols_;
  }
  std::size_t index(VertexId v) const {
    return static_cast<std::size_t>(v.i) * cols_ + v.j;
  }
  VertexId vertex(std::size_t index) const {
    return {static_cast<int>(index / cols_), static_cast<int>(index % cols_)};
  }
  double r(VertexId v) const { return r_[index(v)]; }

  double max_r() const { return *std::max_element(r_.begin(), r_.end()); }

 private:
  int rows_;
  int cols_;
  double cell_size_;
  std::vector<double> r_;
};

inline HeatGraph build_heat_graph(const Heatmap& map) {
  std::vector<double> r;
  r.reserve(map.cells().size());
  for (double h : map.cells()) r.push_back(eff_weight(h));
  return HeatGraph(map.height(), map.width(), std::move(r), map.cell_size());
}

// Euclidean distance in grid units: 1 side-adjacent, sqrt(2) diagonal.
inline double edge_weight(VertexId a, VertexId b) {
  if (a == b) throw ArgumentError("edge_weight of a vertex to itself: " + to_string(a));
  const double di = a.i - b.i;
  const double dj = a.j - b.j;
  return std::sqrt(di * di + dj * dj);
}

inline bool adjacent8(VertexId a, VertexId b) {
  return a != b && std::abs(a.i - b.i) <= 1 && std::abs(a.j - b.j) <= 1;
}

// In-bounds vertices at Chebyshev distance 1, row-major.
inline std::vector<VertexId> neighbors8(const HeatGraph& g, VertexId v) {
  std::vector<VertexId> out;
  out.reserve(8);
  for (int di = -1; di <= 1; ++di) {
    for (int dj = -1; dj <= 1; ++dj) {
      if (di == 0 && dj == 0) continue;
      const VertexId n{v.i + di, v.j + dj};
      if (g.contains(n)) out.push_back(n);
    }
  }
  return out;
}

// The set of covered vertices of one planning run (the CLOSE set).
class CoverSet {
 public:
  explicit CoverSet(const HeatGraph& g)
      : cols_(g.cols()), bits_(g.size(), 0) {}

  bool contains(VertexId v) const { return bits_[index(v)] != 0; }

  // Returns true when v was not covered before.
  bool insert(VertexId v) {
    auto& b = bits_[index(v)];
    if (b) return false;
    b = 1;
    ++count_;
    return true;
  }

  std::size_t count() const { return count_; }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if (bits_[k]) out.push_back({static_cast<int>(k / cols_), static_cast<int>(k % cols_)});
    }
    return out;
  }

 private:
  std::size_t index(VertexId v) const {
    return static_cast<std::size_t>(v.i) * cols_ + v.j;
  }

  int cols_;
  std::vector<unsigned char> bits_;
  std::size_t count_ = 0;
};

// Nearest uncovered vertex (other than `from`) with r > r_th; ties go to the
// row-major smallest vertex.
//
// Scans Chebyshev rings outward from `from`. A vertex on ring k is at least k
// away, so once k^2 exceeds the best squared distance found no later ring can
// win. Distances are compared as exact integers.
inline std::optional<VertexId> nearest_above_threshold(const HeatGraph& g, VertexId from,
                                                       const CoverSet& covered, double r_th) {
  std::optional<VertexId> best;
  std::int64_t best_d2 = 0;
  auto consider = [&](VertexId v) {
    if (!g.contains(v) || covered.contains(v) || !(g.r(v) > r_th)) return;
    const std::int64_t di = v.i - from.i;
    const std::int64_t dj = v.j - from.j;
    const std::int64_t d2 = di * di + dj * dj;
    if (!best || std::tie(d2, v) < std::tie(best_d2, *best)) {
      best = v;
      best_d2 = d2;
    }
  };
  const int max_ring = std::max({from.i, g.rows() - 1 - from.i, from.j, g.cols() - 1 - from.j});
  for (int k = 1; k <= max_ring; ++k) {
    if (best && static_cast<std::int64_t>(k) * k > best_d2) break;
    for (int j = from.j - k; j <= from.j + k; ++j) {
      consider({from.i - k, j});
      consider({from.i + k, j});
    }
    for (int i = from.i - k + 1; i <= from.i + k - 1; ++i) {
      consider({i, from.j - k});
      consider({i, from.j + k});
    }
  }
  return best;
}

}  // namespace heatpath

#endif  // HEATPATH_HEATGRAPH_HPP_
