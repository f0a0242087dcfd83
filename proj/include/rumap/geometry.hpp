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

#ifndef RUMAP_GEOMETRY_HPP_
#define RUMAP_GEOMETRY_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace rumap {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain. Counter-clockwise, starting at the lowest-x
// (then lowest-y) point, collinear points dropped. Fewer than three distinct
// points come back as the distinct points themselves.
inline std::vector<Point2> convex_hull(std::span<const Point2> pts) {
  std::vector<Point2> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Point2> hull(2 * p.size());
  std::size_t k = 0;
  for (const auto& q : p) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0.0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Shoelace formula; positive for counter-clockwise vertex order.
inline double signed_area(std::span<const Point2> poly) {
  double acc = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    acc += a.x * b.y - b.x * a.y;
  }
  return 0.5 * acc;
}

inline double polygon_area(std::span<const Point2> poly) { return std::abs(signed_area(poly)); }

// Counter-clockwise convex polygon; points within `tol` of an edge count as inside.
inline bool contains(std::span<const Point2> convex_ccw, const Point2& q, double tol = 1e-9) {
  if (convex_ccw.size() < 3) return false;
  for (std::size_t i = 0; i < convex_ccw.size(); ++i) {
    const auto& a = convex_ccw[i];
    const auto& b = convex_ccw[(i + 1) % convex_ccw.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (cross(a, b, q) < -tol * std::max(len, 1.0)) return false;
  }
  return true;
}

}  // namespace rumap

#endif  // RUMAP_GEOMETRY_HPP_
