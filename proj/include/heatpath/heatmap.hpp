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

// Prior disaster heatmaps: a rectangular grid of heat-values, one per cell,
// each drawn from a small ordered palette of scene classes.

#ifndef HEATPATH_HEATMAP_HPP_
#define HEATPATH_HEATMAP_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heatpath/error.hpp"
#include "heatpath/format.hpp"
#include "heatpath/rng.hpp"

namespace heatpath {

inline constexpr double kDefaultCellSize = 40.0;

// Heat-values read from text are matched to palette entries within this
// tolerance and then replaced by the exact palette value.
inline constexpr double kHeatMatchTolerance = 1e-9;

struct PaletteEntry {
  std::string label;
  double heat_value = 0.0;
};

// Ordered scene classes. Construction enforces:
//   - at least 2 entries, heat-values strictly increasing within (0, 1];
//   - the top entry is exactly 1.0 (the dominant class);
//   - one entry is 0.2, the class whose Eff-weight is 0.
class ClassPalette {
 public:
  explicit ClassPalette(std::vector<PaletteEntry> entries)
      : entries_(std::move(entries)) {
    if (entries_.size() < 2) {
      throw ValidationError("palette needs at least 2 classes, got " +
                            std::to_string(entries_.size()));
    }
    bool has_worthless = false;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      const double h = entries_[k].heat_value;
      if (!(h > 0.0 && h <= 1.0)) {
        throw ValidationError("palette heat-value " + format_shortest(h) +
                              " for '" + entries_[k].label +
                              "' is outside (0, 1]");
      }
      if (k > 0 && !(h > entries_[k - 1].heat_value)) {
        throw ValidationError("palette heat-values must be strictly increasing");
      }
      if (h == 0.2) has_worthless = true;
    }
    if (entries_.back().heat_value != 1.0) {
      throw ValidationError("palette must contain exactly one class with heat-value 1.0");
    }
    if (!has_worthless) {
      throw ValidationError("palette must contain a worthless class (heat-value 0.2)");
    }
  }

  // water 0.2, greenery 0.4, road 0.6, building 0.8, crowd-venue 1.0.
  static ClassPalette default_palette() {
    return ClassPalette({{"water", 0.2},
                         {"greenery", 0.4},
                         {"road", 0.6},
                         {"building", 0.8},
                         {"crowd-venue", 1.0}});
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<PaletteEntry>& entries() const { return entries_; }
  const PaletteEntry& operator[](std::size_t k) const { return entries_[k]; }

  std::optional<std::size_t> index_of_label(std::string_view label) const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].label == label) return k;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> index_of_heat(double h) const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (std::abs(entries_[k].heat_value - h) <= kHeatMatchTolerance) return k;
    }
    return std::nullopt;
  }

  friend bool operator==(const ClassPalette& a, const ClassPalette& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      if (a.entries_[k].label != b.entries_[k].label ||
          a.entries_[k].heat_value != b.entries_[k].heat_value) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<PaletteEntry> entries_;
};

// Immutable row-major grid of heat-values. Row 0 is the top of the map.
class Heatmap {
 public:
  // Every cell is validated against the palette and snapped to the exact
  // palette value.
  Heatmap(int width, int height, std::vector<double> cells,
          const ClassPalette& palette, double cell_size = kDefaultCellSize)
      : width_(width), height_(height), cell_size_(cell_size),
        cells_(std::move(cells)) {
    if (width < 1 || height < 1) {
      throw ArgumentError("heatmap dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
    }
    if (!(cell_size > 0.0)) {
      throw ArgumentError("cell size must be positive");
    }
    if (cells_.size() != static_cast<std::size_t>(width) * height) {
      throw ArgumentError("heatmap cell count does not match dimensions");
    }
    for (int i = 0; i < height; ++i) {
      for (int j = 0; j < width; ++j) {
        double& h = cells_[static_cast<std::size_t>(i) * width + j];
        auto k = palette.index_of_heat(h);
        if (!k) {
          throw ValidationError("heat-value " + format_shortest(h) + " at (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ") is not in the palette");
        }
        h = palette[*k].heat_value;
      }
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  double cell_size() const { return cell_size_; }
  std::span<const double> cells() const { return cells_; }

  // (i, j) = (row, column).
  double at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * width_ + j];
  }

  friend bool operator==(const Heatmap&, const Heatmap&) = default;

 private:
  int width_;
  int height_;
  double cell_size_;
  std::vector<double> cells_;
};

struct LoadOptions {
  // When set, a leading "# cell_size=<meters>" line overrides the default
  // cell size; otherwise the header is accepted and ignored.
  bool honor_cell_size_header = false;
};

// Reads the heatmap CSV format: one grid row per line, comma-separated
// decimal heat-values, optional leading '#' comment lines.
inline Heatmap load_heatmap(std::istream& in, const ClassPalette& palette,
                            const LoadOptions& options = {}) {
  std::vector<double> cells;
  int width = -1;
  int rows = 0;
  double cell_size = kDefaultCellSize;
  std::string line;
  bool in_header = true;
  std::size_t blank_run = 0;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (in_header && !view.empty() && view.front() == '#') {
      constexpr std::string_view key = "cell_size=";
      auto body = trim(view.substr(1));
      if (options.honor_cell_size_header && body.substr(0, key.size()) == key) {
        auto v = parse_double(body.substr(key.size()));
        if (!v || !(*v > 0.0)) throw ParseError("invalid cell_size header: " + line);
        cell_size = *v;
      }
      continue;
    }
    in_header = false;
    if (view.empty()) {
      ++blank_run;
      continue;
    }
    if (blank_run > 0) {
      throw ParseError("blank line inside heatmap before row " + std::to_string(rows));
    }
    int count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = view.find(',', start);
      const auto field = view.substr(start, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - start);
      auto v = parse_double(field);
      if (!v) {
        throw ParseError("row " + std::to_string(rows) + ", column " +
                         std::to_string(count) + ": not a number: '" +
                         std::string(trim(field)) + "'");
      }
      cells.push_back(*v);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (width < 0) {
      width = count;
    } else if (count != width) {
      throw ParseError("row " + std::to_string(rows) + " has " +
                       std::to_string(count) + " values, expected " +
                       std::to_string(width));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("heatmap contains no rows");
  return Heatmap(width, rows, std::move(cells), palette, cell_size);
}

inline Heatmap load_heatmap(std::string_view text, const ClassPalette& palette,
                            const LoadOptions& options = {}) {
  std::istringstream in{std::string(text)};
  return load_heatmap(in, palette, options);
}

inline Heatmap load_heatmap_file(const std::filesystem::path& path,
                                 const ClassPalette& palette,
                                 const LoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open heatmap file '" + path.string() + "'");
  try {
    return load_heatmap(in, palette, options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

// Canonical CSV. A cell_size header is written only for non-default sizes,
// so default maps round-trip byte-for-byte.
inline void save_heatmap(std::ostream& out, const Heatmap& map) {
  if (map.cell_size() != kDefaultCellSize) {
    out << "# cell_size=" << format_shortest(map.cell_size()) << '\n';
  }
  for (int i = 0; i < map.height(); ++i) {
    for (int j = 0; j < map.width(); ++j) {
      if (j > 0) out << ',';
      out << format_decimal(map.at(i, j));
    }
    out << '\n';
  }
}

inline std::string to_csv(const Heatmap& map) {
  std::ostringstream out;
  save_heatmap(out, map);
  return out.str();
}

// Cell (i, j) is sampled at draw index i*width + j. Each cell consumes one
// uniform01() draw, mapped to a class by inverse CDF over class_probs
// (first class k whose cumulative probability exceeds the draw).
inline Heatmap random_heatmap(std::uint64_t seed, int width, int height,
                              const ClassPalette& palette,
                              std::optional<std::vector<double>> class_probs = std::nullopt) {
  if (width < 1 || height < 1) {
    throw ArgumentError("random heatmap dimensions must be positive, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
  std::vector<double> probs;
  if (class_probs) {
    probs = *class_probs;
    if (probs.size() != palette.size()) {
      throw ArgumentError("class_probs needs one entry per palette class");
    }
    for (double p : probs) {
      if (!(p >= 0.0)) throw ArgumentError("class_probs entries must be non-negative");
    }
    const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ArgumentError("class_probs must sum to 1, got " + format_shortest(sum));
    }
  } else {
    probs.assign(palette.size(), 1.0 / static_cast<double>(palette.size()));
  }
  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());

  Rng rng(seed);
  std::vector<double> cells(static_cast<std::size_t>(width) * height);
  for (double& cell : cells) {
    const double u = rng.uniform01();
    std::size_t k = 0;
    while (k + 1 < cumulative.size() && !(u < cumulative[k])) ++k;
    cell = palette[k].heat_value;
  }
  return Heatmap(width, height, std::move(cells), palette);
}

inline Heatmap heatmap_from_class_grid(const std::vector<std::vector<std::string>>& labels,
                                       const ClassPalette& palette,
                                       double cell_size = kDefaultCellSize) {
  if (labels.empty() || labels.front().empty()) {
    throw ArgumentError("class grid must be non-empty");
  }
  const int height = static_cast<int>(labels.size());
  const int width = static_cast<int>(labels.front().size());
  std::vector<double> cells;
  cells.reserve(static_cast<std::size_t>(width) * height);
  for (int i = 0; i < height; ++i) {
    if (static_cast<int>(labels[i].size()) != width) {
      throw ArgumentError("class grid row " + std::to_string(i) + " has " +
                          std::to_string(labels[i].size()) + " labels, expected " +
                          std::to_string(width));
    }
    for (int j = 0; j < width; ++j) {
      auto k = palette.index_of_label(labels[i][j]);
      if (!k) {
        throw ValidationError("unknown class label '" + labels[i][j] + "' at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      cells.push_back(palette[*k].heat_value);
    }
  }
  return Heatmap(width, height, std::move(cells), palette, cell_size);
}

// Cell counts per palette class, in palette order.
inline std::vector<std::size_t> class_histogram(const Heatmap& map,
                                                const ClassPalette& palette) {
  std::vector<std::size_t> counts(palette.size(), 0);
  for (double h : map.cells()) {
    if (auto k = palette.index_of_heat(h)) ++counts[*k];
  }
  return counts;
}

}  // namespace heatpath

#endif  // HEATPATH_HEATMAP_HPP_
