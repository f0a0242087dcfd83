//
// Copyright 2026 The rumap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Radial (origami) profiles with shoelace areas, and the parallel-coordinate
// view of the normalized matrix.

#ifndef RUMAP_PROFILES_HPP_
#define RUMAP_PROFILES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "rumap/error.hpp"
#include "rumap/geometry.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/pareto.hpp"

namespace rumap {

inline constexpr double kDefaultAuxRadius = 0.1;

struct RadialProfile {
  std::string id;
  std::vector<double> angles;  // 2m angles, main axes at even positions
  std::vector<double> radii;
  std::vector<Point2> vertices;
  double area_raw = 0.0;
  double area_normalized = 0.0;  // relative to the all-ones profile
};

namespace detail {

inline void fill_polygon(RadialProfile& prof, std::span<const double> main_radii, double r_aux) {
  const std::size_t m = main_radii.size();
  const std::size_t axes = 2 * m;
  prof.angles.clear();
  prof.radii.clear();
  prof.vertices.clear();
  for (std::size_t j = 0; j < axes; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(axes);
    const double r = j % 2 == 0 ? main_radii[j / 2] : r_aux;
    prof.angles.push_back(theta);
    prof.radii.push_back(r);
    prof.vertices.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  prof.area_raw = polygon_area(prof.vertices);
}

}  // namespace detail

// Builds the origami polygon for one row of normalized values (given in axis
// order). `weights`, when non-empty, multiply the main-axis radii; the result
// is clamped to [0, 1]. Risk values are used as they are, not inverted.
inline RadialProfile build_origami(std::string id, std::span<const double> values,
                                   double r_aux = kDefaultAuxRadius,
                                   std::span<const double> weights = {}) {
  const std::size_t m = values.size();
  if (m < 3) throw ValidationError("origami profile needs at least 3 measures");
  if (!(r_aux > 0.0 && r_aux < 1.0)) throw ValidationError("auxiliary radius must lie in (0, 1)");
  if (!weights.empty() && weights.size() != m)
    throw ValidationError("origami weights do not match the measure count");
  std::vector<double> radii(m);
  for (std::size_t i = 0; i < m; ++i)
    radii[i] = std::clamp(values[i] * (weights.empty() ? 1.0 : weights[i]), 0.0, 1.0);

  RadialProfile ones;
  const std::vector<double> unit(m, 1.0);
  detail::fill_polygon(ones, unit, r_aux);

  RadialProfile prof;
  prof.id = std::move(id);
  detail::fill_polygon(prof, radii, r_aux);
  prof.area_normalized = prof.area_raw / ones.area_raw;
  return prof;
}

inline std::vector<RadialProfile> build_origami_all(const NormalizedMatrix& nm,
                                                    double r_aux = kDefaultAuxRadius,
                                                    std::span<const double> weights = {}) {
  std::vector<RadialProfile> out;
  for (std::size_t i = 0; i < nm.num_rows(); ++i) {
    std::vector<double> row(nm.num_measures());
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    out.push_back(build_origami(nm.rows[i].label(), row, r_aux, weights));
  }
  return out;
}

struct AreaRank {
  std::string id;
  double area = 0.0;
};

inline constexpr const char* kAreaCaveat =
    "descriptive only: risk radii grow with disclosure risk, so the area is not a "
    "quality score and should not be used to rank approaches";

// Descending by normalized area; equal areas ordered by id.
inline std::vector<AreaRank> ranked_areas(std::span<const RadialProfile> profiles) {
  std::vector<AreaRank> out;
  for (const auto& p : profiles) out.push_back({p.id, p.area_normalized});
  std::stable_sort(out.begin(), out.end(), [](const AreaRank& a, const AreaRank& b) {
    if (a.area != b.area) return a.area > b.area;
    return a.id < b.id;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Parallel coordinates

struct PcpLine {
  std::string id;
  std::vector<double> values;  // one per axis
  bool pareto = false;
  bool reference = false;
};

struct PcpLines {
  std::vector<std::size_t> axes;  // measure indices, risk facet then utility facet
  std::vector<PcpLine> lines;
};

inline PcpLines build_pcp(const NormalizedMatrix& nm, std::span<const std::size_t> pareto_rows) {
  PcpLines out;
  for (Block b : {Block::Risk, Block::Utility})
    for (auto c : nm.block_columns(b)) out.axes.push_back(c);
  for (std::size_t i = 0; i < nm.num_rows(); ++i) {
    PcpLine line;
    line.id = nm.rows[i].label();
    line.reference = nm.rows[i].is_reference;
    line.pareto = std::find(pareto_rows.begin(), pareto_rows.end(), i) != pareto_rows.end();
    for (auto c : out.axes)
      line.values.push_back(nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)));
    out.lines.push_back(std::move(line));
  }
  return out;
}

}  // namespace rumap

#endif  // RUMAP_PROFILES_HPP_
