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

#ifndef RUMAP_PARETO_HPP_
#define RUMAP_PARETO_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"
#include "rumap/measure_model.hpp"

namespace rumap {

// Strong dominance: i is no worse on every measure (utility >=, risk <=) and
// strictly better on at least one. Exact comparisons, no tolerance.
inline bool dominates(std::span<const double> u_i, std::span<const double> r_i,
                      std::span<const double> u_j, std::span<const double> r_j) {
  if (u_i.size() != u_j.size() || r_i.size() != r_j.size())
    throw ValidationError("dominance check on vectors of different lengths");
  bool strict = false;
  for (std::size_t k = 0; k < u_i.size(); ++k) {
    if (u_i[k] < u_j[k]) return false;
    strict = strict || u_i[k] > u_j[k];
  }
  for (std::size_t k = 0; k < r_i.size(); ++k) {
    if (r_i[k] > r_j[k]) return false;
    strict = strict || r_i[k] < r_j[k];
  }
  return strict;
}

struct ParetoSet {
  std::vector<std::size_t> members;          // row indices, ascending
  std::vector<bool> candidate;               // rows that competed
  std::vector<std::vector<bool>> dominance;  // dominance[i][j]: row i dominates row j

  bool contains(std::size_t row) const {
    return std::binary_search(members.begin(), members.end(), row);
  }
};

namespace detail {

inline std::vector<double> row_values(const Eigen::MatrixXd& m, Eigen::Index row,
                                      std::span<const std::size_t> cols) {
  std::vector<double> out;
  out.reserve(cols.size());
  for (auto c : cols) out.push_back(m(row, static_cast<Eigen::Index>(c)));
  return out;
}

}  // namespace detail

// Full-vector Pareto set over every declared measure. The dominance relation
// is reported for all row pairs; candidacy excludes reference rows unless
// `exclude_reference` is false.
inline ParetoSet pareto_set(const NormalizedMatrix& nm, bool exclude_reference = true) {
  const std::size_t n = nm.num_rows();
  const auto ucols = nm.block_columns(Block::Utility);
  const auto rcols = nm.block_columns(Block::Risk);
  std::vector<std::vector<double>> u(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = detail::row_values(nm.values, static_cast<Eigen::Index>(i), ucols);
    r[i] = detail::row_values(nm.values, static_cast<Eigen::Index>(i), rcols);
  }
  ParetoSet out;
  out.dominance.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.dominance[i][j] = dominates(u[i], r[i], u[j], r[j]);
  out.candidate.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.candidate[i] = !(exclude_reference && nm.rows[i].is_reference);
  for (std::size_t j = 0; j < n; ++j) {
    if (!out.candidate[j]) continue;
    bool dominated = false;
    for (std::size_t i = 0; i < n && !dominated; ++i)
      dominated = out.candidate[i] && out.dominance[i][j];
    if (!dominated) out.members.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Composite (two-objective) front

struct CompositePoint {
  std::string id;
  double u = 0.0;  // composite utility, maximized
  double r = 0.0;  // composite risk, minimized
};

struct FrontEdge {
  std::size_t from = 0;  // positions in CompositeFront::front
  std::size_t to = 0;
  double du = 0.0;
  double dr = 0.0;
  double slope = 0.0;  // dr / du, meaningful only when slope_defined
  bool slope_defined = false;
};

struct CompositeFront {
  std::vector<std::size_t> front;  // indices into the input points, U ascending
  std::vector<FrontEdge> edges;    // one per consecutive pair of front points
};

inline bool dominates_2d(const CompositePoint& a, const CompositePoint& b) {
  return a.u >= b.u && a.r <= b.r && (a.u > b.u || a.r < b.r);
}

// Non-dominated subset of the composite points, ordered by U ascending with
// ties broken by R then id.
inline CompositeFront composite_front(std::span<const CompositePoint> points) {
  CompositeFront out;
  for (std::size_t j = 0; j < points.size(); ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < points.size() && !dominated; ++i)
      dominated = i != j && dominates_2d(points[i], points[j]);
    if (!dominated) out.front.push_back(j);
  }
  std::sort(out.front.begin(), out.front.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = points[a];
    const auto& pb = points[b];
    if (pa.u != pb.u) return pa.u < pb.u;
    if (pa.r != pb.r) return pa.r < pb.r;
    return pa.id < pb.id;
  });
  for (std::size_t k = 0; k + 1 < out.front.size(); ++k) {
    const auto& a = points[out.front[k]];
    const auto& b = points[out.front[k + 1]];
    FrontEdge e{k, k + 1, b.u - a.u, b.r - a.r, 0.0, false};
    if (e.du > 0.0) {
      e.slope = e.dr / e.du;
      e.slope_defined = true;
    }
    out.edges.push_back(e);
  }
  return out;
}

struct Knee {
  std::size_t index = 0;  // position within the points handed to knee_point
  std::string id;
  double distance = 0.0;  // perpendicular distance to the extreme-point chord
  // True when the knee lies below the chord, i.e. the front bulges toward the
  // high-utility / low-risk corner and utility gains diminish per unit risk.
  bool concave = false;
};

inline constexpr double kKneeMinDistance = 1e-9;

// Interior front point farthest from the chord joining the two extreme front
// points. Needs at least three points and a distance above kKneeMinDistance.
inline std::optional<Knee> knee_point(std::span<const CompositePoint> front) {
  if (front.size() < 3) return std::nullopt;
  std::vector<std::size_t> order(front.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (front[a].u != front[b].u) return front[a].u < front[b].u;
    if (front[a].r != front[b].r) return front[a].r < front[b].r;
    return front[a].id < front[b].id;
  });
  const auto& first = front[order.front()];
  const auto& last = front[order.back()];
  const double dx = last.u - first.u;
  const double dy = last.r - first.r;
  const double len = std::hypot(dx, dy);
  if (len <= 0.0) return std::nullopt;

  std::optional<Knee> best;
  double best_cross = 0.0;
  for (std::size_t k = 1; k + 1 < order.size(); ++k) {
    const auto& p = front[order[k]];
    const double cross = dx * (p.r - first.r) - dy * (p.u - first.u);
    const double d = std::abs(cross) / len;
    bool better = !best;
    if (best) {
      const auto& q = front[best->index];
      if (d > best->distance + 1e-15) {
        better = true;
      } else if (std::abs(d - best->distance) <= 1e-15) {
        better = p.r < q.r || (p.r == q.r && p.id < q.id);
      }
    }
    if (better) {
      best = Knee{order[k], p.id, d, false};
      best_cross = cross;
    }
  }
  if (!best || best->distance < kKneeMinDistance) return std::nullopt;
  best->concave = best_cross < 0.0;
  return best;
}

struct Ray {
  std::string id;
  double du = 0.0;  // U_i - U_0
  double dr = 0.0;  // R_i - R_0
  double slope = 0.0;
  bool slope_defined = false;
  double l2 = 0.0;
};

inline constexpr double kVerticalRayTolerance = 1e-12;

// Slope (R_i - R_0) / (U_i - U_0) and Euclidean distance from each point to
// the reference point in the composite plane.
inline std::vector<Ray> rays_to_reference(std::span<const CompositePoint> points,
                                          const CompositePoint& reference) {
  std::vector<Ray> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Ray ray;
    ray.id = p.id;
    ray.du = p.u - reference.u;
    ray.dr = p.r - reference.r;
    ray.l2 = std::hypot(ray.du, ray.dr);
    if (std::abs(ray.du) >= kVerticalRayTolerance) {
      ray.slope = ray.dr / ray.du;
      ray.slope_defined = true;
    }
    out.push_back(ray);
  }
  return out;
}

}  // namespace rumap

#endif  // RUMAP_PARETO_HPP_
