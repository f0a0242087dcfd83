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

// Geometry in the PC1/PC2 plane: projected acceptance regions and
// per-dataset group summaries.

#ifndef RUMAP_PROJECTION_HPP_
#define RUMAP_PROJECTION_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"
#include "rumap/geometry.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/pca.hpp"
#include "rumap/stats.hpp"

namespace rumap {

struct AcceptancePolygon {
  std::vector<Point2> vertices;  // convex, counter-clockwise
  std::vector<double> thresholds;
  std::vector<double> lower;  // per-measure box bounds in normalized units
  std::vector<double> upper;
  bool enumerated = true;  // every box vertex projected (p <= 16)
};

inline constexpr std::size_t kMaxEnumeratedMeasures = 16;
inline constexpr std::size_t kMaxAcceptanceMeasures = 30;

// Per-measure box: risk [0, c], utility [c, 1]. Its image under
// t = P^T (v - mu) is a convex polygon (a zonogon).
inline AcceptancePolygon project_acceptance_region(const PcaModel& model,
                                                   std::span<const MeasureSpec> specs,
                                                   std::span<const double> thresholds) {
  const std::size_t p = specs.size();
  if (model.components() != 2)
    throw AnalysisError("acceptance region needs a two-component model");
  if (static_cast<std::size_t>(model.loadings.rows()) != p || thresholds.size() != p)
    throw ValidationError("acceptance thresholds do not match the measure count");
  if (p > kMaxAcceptanceMeasures)
    throw ValidationError("acceptance region supports at most " +
                          std::to_string(kMaxAcceptanceMeasures) + " measures");
  AcceptancePolygon poly;
  poly.thresholds.assign(thresholds.begin(), thresholds.end());
  for (std::size_t m = 0; m < p; ++m) {
    const double c = thresholds[m];
    if (!(c >= 0.0 && c <= 1.0))
      throw ValidationError("threshold for '" + specs[m].id + "' must lie in [0, 1]");
    poly.lower.push_back(specs[m].block == Block::Risk ? 0.0 : c);
    poly.upper.push_back(specs[m].block == Block::Risk ? c : 1.0);
  }
  const auto project = [&](const Eigen::VectorXd& v) {
    const Eigen::VectorXd t = model.project(v);
    return Point2{t(0), t(1)};
  };
  std::vector<Point2> pts;
  Eigen::VectorXd v(static_cast<Eigen::Index>(p));
  if (p <= kMaxEnumeratedMeasures) {
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      for (std::size_t m = 0; m < p; ++m)
        v(static_cast<Eigen::Index>(m)) = (mask >> m) & 1u ? poly.upper[m] : poly.lower[m];
      pts.push_back(project(v));
    }
  } else {
    // The support point in direction theta takes the upper bound wherever the
    // loading row has a positive component along theta, so evaluating one
    // direction inside each arc between consecutive edge normals visits every
    // polygon vertex.
    poly.enumerated = false;
    std::vector<double> angles;
    for (std::size_t m = 0; m < p; ++m) {
      const double a = model.loadings(static_cast<Eigen::Index>(m), 0);
      const double b = model.loadings(static_cast<Eigen::Index>(m), 1);
      if (a == 0.0 && b == 0.0) continue;
      const double normal = std::atan2(b, a) + std::numbers::pi / 2;
      for (double ang : {normal, normal + std::numbers::pi})
        angles.push_back(std::remainder(ang, 2 * std::numbers::pi));
    }
    std::sort(angles.begin(), angles.end());
    if (angles.empty()) angles.push_back(0.0);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const double next = i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2 * std::numbers::pi;
      const double theta = 0.5 * (angles[i] + next);
      const double cx = std::cos(theta), cy = std::sin(theta);
      for (std::size_t m = 0; m < p; ++m) {
        const auto row = static_cast<Eigen::Index>(m);
        const double dot = model.loadings(row, 0) * cx + model.loadings(row, 1) * cy;
        v(row) = dot > 0.0 ? poly.upper[m] : poly.lower[m];
      }
      pts.push_back(project(v));
    }
  }
  poly.vertices = convex_hull(pts);
  return poly;
}

// ---------------------------------------------------------------------------
// Per-dataset summaries

struct Ellipse {
  Point2 center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double angle = 0.0;  // radians, orientation of the major axis
};

struct GroupSummary {
  std::string group;
  std::vector<std::size_t> members;
  Point2 centroid;
  std::optional<Ellipse> ellipse;  // size >= 3 with non-singular covariance
  std::vector<Point2> hull;        // otherwise, when size >= 2
};

inline constexpr double kEllipseLevel = 0.95;

// One summary per distinct label, labels in lexicographic order.
inline std::vector<GroupSummary> group_summaries(std::span<const Point2> scores,
                                                 std::span<const std::string> groups) {
  if (scores.size() != groups.size())
    throw ValidationError("group labels do not match the score count");
  std::map<std::string, std::vector<std::size_t>> by_group;
  for (std::size_t i = 0; i < groups.size(); ++i) by_group[groups[i]].push_back(i);
  const double chi2 = stats::chi2_quantile(2.0, kEllipseLevel);
  std::vector<GroupSummary> out;
  for (const auto& [label, members] : by_group) {
    GroupSummary g;
    g.group = label;
    g.members = members;
    std::vector<Point2> pts;
    for (auto i : members) pts.push_back(scores[i]);
    const double n = static_cast<double>(pts.size());
    for (const auto& q : pts) {
      g.centroid.x += q.x / n;
      g.centroid.y += q.y / n;
    }
    bool drew_ellipse = false;
    if (pts.size() >= 3) {
      Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
      for (const auto& q : pts) {
        const Eigen::Vector2d d(q.x - g.centroid.x, q.y - g.centroid.y);
        cov += d * d.transpose();
      }
      cov /= n - 1.0;
      const double scale = std::max(cov.trace(), 1e-300);
      if (cov.determinant() > 1e-12 * scale * scale) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
        const Eigen::Vector2d major = es.eigenvectors().col(1);
        g.ellipse = Ellipse{g.centroid, std::sqrt(chi2 * es.eigenvalues()(1)),
                            std::sqrt(chi2 * std::max(es.eigenvalues()(0), 0.0)),
                            std::atan2(major.y(), major.x())};
        drew_ellipse = true;
      }
    }
    if (!drew_ellipse && pts.size() >= 2) g.hull = convex_hull(pts);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace rumap

#endif  // RUMAP_PROJECTION_HPP_
