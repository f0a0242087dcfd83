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

// Independent reference implementations used by the unit and acceptance
// tests. None of these share code with the library.

#ifndef RUMAP_TESTS_ORACLES_HPP_
#define RUMAP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rumap/measure_model.hpp"

namespace oracle {

using Rows = std::vector<std::vector<double>>;

// Pareto membership by counting better/worse coordinates for every pair.
inline std::vector<bool> pareto_members(const Rows& u, const Rows& r, const std::vector<bool>& candidate) {
  const std::size_t n = u.size();
  std::vector<bool> member(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (!candidate[j]) continue;
    bool dominated = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !candidate[i]) continue;
      int worse = 0, better = 0;
      for (std::size_t k = 0; k < u[i].size(); ++k) {
        worse += u[i][k] < u[j][k];
        better += u[i][k] > u[j][k];
      }
      for (std::size_t k = 0; k < r[i].size(); ++k) {
        worse += r[i][k] > r[j][k];
        better += r[i][k] < r[j][k];
      }
      if (worse == 0 && better > 0) dominated = true;
    }
    member[j] = !dominated;
  }
  return member;
}

// 2-D front by a staircase sweep: U descending, keep points whose R beats
// everything with strictly larger U and which are the minimal R at their U.
inline std::set<std::size_t> staircase_front(const std::vector<std::pair<double, double>>& ur) {
  std::vector<std::size_t> idx(ur.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (ur[a].first != ur[b].first) return ur[a].first > ur[b].first;
    return ur[a].second < ur[b].second;
  });
  std::set<std::size_t> out;
  double best_r = INFINITY;
  std::size_t g = 0;
  while (g < idx.size()) {
    std::size_t h = g;
    while (h < idx.size() && ur[idx[h]].first == ur[idx[g]].first) ++h;
    const double group_min = ur[idx[g]].second;
    if (group_min < best_r)
      for (std::size_t k = g; k < h && ur[idx[k]].second == group_min; ++k) out.insert(idx[k]);
    best_r = std::min(best_r, group_min);
    g = h;
  }
  return out;
}

struct NaiveMerge {
  std::set<std::size_t> a, b;  // a holds the smaller leaf
  double height;
};

// O(n^3) agglomeration recomputing cluster distances from leaf distances.
inline std::vector<NaiveMerge> naive_hclust(const Eigen::MatrixXd& x, const std::string& linkage) {
  const auto n = static_cast<std::size_t>(x.rows());
  auto leaf_d = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      const double t = x(static_cast<Eigen::Index>(i), c) - x(static_cast<Eigen::Index>(j), c);
      s += t * t;
    }
    return std::sqrt(s);
  };
  std::vector<std::set<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
  std::vector<NaiveMerge> out;
  while (clusters.size() > 1) {
    double best = INFINITY;
    std::pair<std::size_t, std::size_t> key{n, n}, pick{0, 0};
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = 0; j < clusters.size(); ++j) {
        if (*clusters[i].begin() >= *clusters[j].begin()) continue;
        double d = linkage == "single" ? INFINITY : 0.0;
        for (auto p : clusters[i])
          for (auto q : clusters[j]) {
            const double v = leaf_d(p, q);
            if (linkage == "complete") d = std::max(d, v);
            else if (linkage == "single") d = std::min(d, v);
            else d += v;
          }
        if (linkage == "average") d /= static_cast<double>(clusters[i].size() * clusters[j].size());
        const std::pair<std::size_t, std::size_t> k{*clusters[i].begin(), *clusters[j].begin()};
        if (d < best || (d == best && k < key)) {
          best = d;
          key = k;
          pick = {i, j};
        }
      }
    out.push_back({clusters[pick.first], clusters[pick.second], best});
    clusters[pick.first].insert(clusters[pick.second].begin(), clusters[pick.second].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(pick.second));
  }
  return out;
}

// Eigenvalues of the sample covariance, descending.
inline std::vector<double> covariance_eigenvalues(const Eigen::MatrixXd& x) {
  const Eigen::MatrixXd c = x.rowwise() - x.colwise().mean();
  const Eigen::MatrixXd cov = c.transpose() * c / static_cast<double>(x.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

// R^2 of y on [1, a, b] from explicitly inverted 3x3 normal equations.
inline double r2_normal_equations(const std::vector<double>& y, const std::vector<double>& a,
                                  const std::vector<double>& b) {
  const std::size_t n = y.size();
  double m[3][3] = {{0}}, v[3] = {0};
  for (std::size_t i = 0; i < n; ++i) {
    const double row[3] = {1.0, a[i], b[i]};
    for (int p = 0; p < 3; ++p) {
      v[p] += row[p] * y[i];
      for (int q = 0; q < 3; ++q) m[p][q] += row[p] * row[q];
    }
  }
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  double inv[3][3];
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      const int r0 = (q + 1) % 3, r1 = (q + 2) % 3, c0 = (p + 1) % 3, c1 = (p + 2) % 3;
      inv[p][q] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  double beta[3];
  for (int p = 0; p < 3; ++p) beta[p] = inv[p][0] * v[0] + inv[p][1] * v[1] + inv[p][2] * v[2];
  double ybar = 0.0;
  for (double t : y) ybar += t;
  ybar /= static_cast<double>(n);
  double sse = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = beta[0] + beta[1] * a[i] + beta[2] * b[i];
    sse += (y[i] - fit) * (y[i] - fit);
    sst += (y[i] - ybar) * (y[i] - ybar);
  }
  return 1.0 - sse / sst;
}

// Star-polygon area as a fan of triangles from the centre:
// 1/2 sum r_i r_{i+1} sin(theta_{i+1} - theta_i).
inline double fan_area(const std::vector<double>& radii) {
  const std::size_t k = radii.size();
  const double step = 2.0 * M_PI / static_cast<double>(k);
  double a = 0.0;
  for (std::size_t i = 0; i < k; ++i) a += 0.5 * radii[i] * radii[(i + 1) % k] * std::sin(step);
  return a;
}

struct P2 {
  double x, y;
};

// Gift-wrapping hull, counter-clockwise, collinear points dropped.
inline std::vector<P2> jarvis_hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> hull;
  std::size_t cur = 0;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = (cur + 1) % pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double c = (pts[next].x - pts[cur].x) * (pts[i].y - pts[cur].y) -
                       (pts[next].y - pts[cur].y) * (pts[i].x - pts[cur].x);
      const double di = std::hypot(pts[i].x - pts[cur].x, pts[i].y - pts[cur].y);
      const double dn = std::hypot(pts[next].x - pts[cur].x, pts[next].y - pts[cur].y);
      if (c < -1e-12 || (std::abs(c) <= 1e-12 && di > dn)) next = i;
    }
    cur = next;
  } while (cur != 0 && hull.size() <= pts.size());
  return hull;
}

inline double polygon_area(const std::vector<P2>& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * std::abs(s);
}

// Items x_j = l_j f + sqrt(1 - l_j^2) e_j where f and the e_j are centred and
// exactly orthonormal in the sample, so the sample correlation matrix is
// exactly l l^T off the diagonal.
inline Eigen::MatrixXd one_factor_items(const std::vector<double>& loadings, int n, std::uint64_t seed) {
  const auto k = static_cast<Eigen::Index>(loadings.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd z(n, k + 1);
  for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = g(rng);
  z = z.rowwise() - z.colwise().mean();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k + 1);
  q *= std::sqrt(static_cast<double>(n - 1));
  Eigen::MatrixXd x(n, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double l = loadings[static_cast<std::size_t>(j)];
    x.col(j) = l * q.col(0) + std::sqrt(1.0 - l * l) * q.col(j + 1);
  }
  return x;
}

// Rank-2 cloud in `p` dimensions (axis scales 5 and 1, isotropic noise 0.01)
// with its last row replaced by a gross outlier at 100x scale.
struct ContaminatedCloud {
  Eigen::MatrixXd data;
  Eigen::MatrixXd clean;  // the same rows without the outlier
  Eigen::Index outlier = 0;
};

inline ContaminatedCloud contaminated_cloud(std::uint64_t seed, int n = 30, int p = 5) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd basis(p, 2);
  for (Eigen::Index i = 0; i < basis.size(); ++i) basis.data()[i] = g(rng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(p, 2);
  ContaminatedCloud c;
  c.data.resize(n, p);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = 5.0 * g(rng) * q.col(0) + 1.0 * g(rng) * q.col(1);
    for (int j = 0; j < p; ++j) x(j) += 0.01 * g(rng);
    c.data.row(i) = x.transpose();
  }
  c.outlier = n - 1;
  c.clean = c.data.topRows(n - 1);
  Eigen::VectorXd o(p);
  for (int j = 0; j < p; ++j) o(j) = g(rng);
  c.data.row(n - 1) = 100.0 * 5.0 * o.normalized().transpose();
  return c;
}

// Angle in degrees between two directions, ignoring sign.
inline double axis_angle_deg(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double c = std::min(1.0, std::abs(a.normalized().dot(b.normalized())));
  return std::acos(c) * 180.0 / M_PI;
}

// Normalized matrix with random values on a coarse grid so that ties occur.
inline rumap::NormalizedMatrix random_normalized(std::mt19937_64& rng, std::size_t n, std::size_t q_risk,
                                                 std::size_t p_util, int levels = 6) {
  rumap::NormalizedMatrix nm;
  for (std::size_t j = 0; j < q_risk; ++j)
    nm.specs.push_back({"r" + std::to_string(j), "r" + std::to_string(j), rumap::Block::Risk,
                        rumap::Direction::LowerIsBetter});
  for (std::size_t j = 0; j < p_util; ++j)
    nm.specs.push_back({"u" + std::to_string(j), "u" + std::to_string(j), rumap::Block::Utility,
                        rumap::Direction::HigherIsBetter});
  std::uniform_int_distribution<int> d(0, levels);
  nm.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(q_risk + p_util));
  for (std::size_t i = 0; i < n; ++i) {
    nm.rows.push_back({"a" + std::to_string(i), std::nullopt, false});
    for (std::size_t j = 0; j < q_risk + p_util; ++j)
      nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d(rng) / static_cast<double>(levels);
  }
  nm.raw_min.assign(q_risk + p_util, 0.0);
  nm.raw_max.assign(q_risk + p_util, 1.0);
  return nm;
}

}  // namespace oracle

#endif  // RUMAP_TESTS_ORACLES_HPP_
