// Copyright 2026 The tripath Authors
//
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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripath/classify.hpp"
#include "tripath/hilbert.hpp"

namespace tripath {

/// Classification of the c1 >= 0 hemisphere, sampled at pixel centres of an
/// orthographic projection onto the (c2, c3) plane. Row 0 is the top edge
/// (c3 = +1) and column 0 the left edge (c2 = -1).
class AtlasGrid {
 public:
  static constexpr std::int16_t kEmpty = -2;     // outside the unit disk
  static constexpr std::int16_t kBoundary = -1;  // a KD value is zero

  AtlasGrid(int resolution, double tol);

  int resolution() const { return resolution_; }
  double tol() const { return tol_; }
  /// Index into all_labels(), or kEmpty / kBoundary.
  std::int16_t at(int row, int col) const { return cells_[offset(row, col)]; }
  void set(int row, int col, std::int16_t value) { cells_[offset(row, col)] = value; }
  SpherePoint pixel_center(int row, int col) const;
  /// Pixel containing the point; the point must lie in [-1, 1]^2.
  std::pair<int, int> pixel_of(const SpherePoint& p) const;
  const std::vector<std::int16_t>& cells() const { return cells_; }

 private:
  std::size_t offset(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(resolution_) +
           static_cast<std::size_t>(col);
  }
  int resolution_;
  double tol_;
  std::vector<std::int16_t> cells_;
};

/// Classifies every in-disk pixel. Rows are split across `threads` workers
/// (0 picks the hardware concurrency); the result does not depend on it.
/// resolution must be at least 16.
AtlasGrid sample_atlas(int resolution, double tol = kDefaultClassifyTol,
                       unsigned threads = 0);

/// Number of pixels carrying each label, indexed like all_labels().
std::vector<std::size_t> label_counts(const AtlasGrid& grid);

enum class RenderFormat { Raster, Vector };

/// "ppm"/"raster" or "svg"/"vector". Throws Error{UnsupportedFormat}.
RenderFormat parse_format(std::string_view name);

struct Rgb {
  std::uint8_t r, g, b;
};

/// The 31 sub-class colours, in all_labels() order.
const std::array<Rgb, 31>& palette();

/// Raster: binary P6 pixmap, one pixel per grid cell, palette colours inside
/// sub-classes and black on boundaries and between differing neighbours,
/// white outside the disk. Vector: SVG with the ten zero-probability great
/// circles (720 samples each) and the twenty named states as labelled markers.
std::string render(const AtlasGrid& grid, RenderFormat format);

/// CSV tables for the named states and the joint-measurement basis.
struct CanonicalTables {
  std::string probabilities;
  std::string kd_values;
  std::string inequality;
  std::string labels;
};

CanonicalTables export_canonical_tables(double tol = kDefaultClassifyTol);

/// Writes `contents` to `path`. Throws Error{IOFailure}.
void write_file(const std::string& path, std::string_view contents);

}  // namespace tripath
