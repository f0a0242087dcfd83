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

#include "rumap/projection.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rumap/error.hpp"
#include "rumap/geometry.hpp"
#include "rumap/pca.hpp"

namespace rumap {
namespace {

std::vector<MeasureSpec> Specs(std::size_t risk, std::size_t util) {
  std::vector<MeasureSpec> s;
  for (std::size_t j = 0; j < risk; ++j) s.push_back({"r" + std::to_string(j), "", Block::Risk, Direction::LowerIsBetter});
  for (std::size_t j = 0; j < util; ++j) s.push_back({"u" + std::to_string(j), "", Block::Utility, Direction::HigherIsBetter});
  return s;
}

Eigen::MatrixXd Uniform(std::mt19937_64& rng, int n, int p) {
  std::uniform_real_distribution<double> d(0, 1);
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = d(rng);
  return x;
}

TEST(GeometryTest, HullAndShoelace) {
  const std::vector<Point2> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}, {1, 1}};
  const auto h = convex_hull(pts);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_GT(signed_area(h), 0.0);
  EXPECT_DOUBLE_EQ(polygon_area(h), 1.0);
  EXPECT_TRUE(contains(h, {0.5, 0.5}));
  EXPECT_TRUE(contains(h, {1.0, 0.5}));
  EXPECT_FALSE(contains(h, {1.1, 0.5}));
  EXPECT_EQ(convex_hull(std::vector<Point2>{{1, 1}, {1, 1}}).size(), 1u);
}

TEST(AcceptanceTest, FullRangeBoxContainsAllScores) {
  std::mt19937_64 rng(1);
  const auto x = Uniform(rng, 9, 6);
  const auto m = pca_fit(x, 2);
  const auto specs = Specs(3, 3);
  const std::vector<double> c = {1, 1, 1, 0, 0, 0};
  const auto poly = project_acceptance_region(m, specs, c);
  for (Eigen::Index i = 0; i < 9; ++i) EXPECT_TRUE(contains(poly.vertices, {m.scores(i, 0), m.scores(i, 1)}));
}

TEST(AcceptanceTest, IdentityLoadingsGiveTranslatedBox) {
  PcaModel m;
  m.center = Eigen::Vector2d(0.25, 0.5);
  m.loadings = Eigen::Matrix2d::Identity();
  m.eigenvalues = Eigen::Vector2d(1, 1);
  const auto poly = project_acceptance_region(m, Specs(1, 1), std::vector<double>{0.6, 0.3});
  ASSERT_EQ(poly.vertices.size(), 4u);
  // Risk [0, 0.6], utility [0.3, 1], minus the centre.
  EXPECT_DOUBLE_EQ(poly.vertices[0].x, -0.25);
  EXPECT_DOUBLE_EQ(poly.vertices[0].y, -0.2);
  EXPECT_NEAR(polygon_area(poly.vertices), 0.6 * 0.7, 1e-15);
}

TEST(AcceptanceTest, MatchesExhaustiveVertexHull) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = Uniform(rng, 10, 5);
    const auto m = pca_fit(x, 2);
    const auto specs = Specs(2, 3);
    std::vector<double> c(5);
    for (auto& v : c) v = d(rng);
    const auto poly = project_acceptance_region(m, specs, c);
    std::vector<oracle::P2> pts;
    for (int mask = 0; mask < 32; ++mask) {
      Eigen::VectorXd v(5);
      for (int j = 0; j < 5; ++j) {
        const bool up = (mask >> j) & 1;
        v(j) = j < 2 ? (up ? c[static_cast<std::size_t>(j)] : 0.0) : (up ? 1.0 : c[static_cast<std::size_t>(j)]);
      }
      const Eigen::VectorXd t = m.loadings.transpose() * (v - m.center);
      pts.push_back({t(0), t(1)});
    }
    const auto hull = oracle::jarvis_hull(pts);
    ASSERT_EQ(hull.size(), poly.vertices.size());
    EXPECT_NEAR(oracle::polygon_area(hull), polygon_area(poly.vertices), 1e-12);
    for (const auto& v : poly.vertices) {
      bool found = false;
      for (const auto& h : hull) found = found || (std::abs(h.x - v.x) < 1e-12 && std::abs(h.y - v.y) < 1e-12);
      EXPECT_TRUE(found);
    }
  }
}

TEST(AcceptanceTest, FeasiblePointsProjectInside) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0, 1);
  const auto x = Uniform(rng, 9, 6);
  const auto m = pca_fit(x, 2);
  const std::vector<double> c = {0.4, 0.5, 0.6, 0.3, 0.5, 0.2};
  const auto specs = Specs(3, 3);
  const auto poly = project_acceptance_region(m, specs, c);
  EXPECT_GT(signed_area(poly.vertices), 0.0);
  for (int s = 0; s < 2000; ++s) {
    Eigen::VectorXd v(6);
    for (int j = 0; j < 6; ++j) {
      const double cj = c[static_cast<std::size_t>(j)];
      v(j) = j < 3 ? cj * d(rng) : cj + (1 - cj) * d(rng);
    }
    const Eigen::VectorXd t = m.project(v);
    ASSERT_TRUE(contains(poly.vertices, {t(0), t(1)}));
  }
}

TEST(AcceptanceTest, SupportWalkMatchesEnumeration) {
  // Padding a 16-measure model with zero loading rows leaves the zonogon
  // unchanged, so the support walk at p = 20 must reproduce the enumeration.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x16 = Uniform(rng, 12, 16);
    const auto m16 = pca_fit(x16, 2);
    PcaModel m20 = m16;
    m20.center = Eigen::VectorXd::Constant(20, 0.5);
    m20.center.head(16) = m16.center;
    m20.loadings = Eigen::MatrixXd::Zero(20, 2);
    m20.loadings.topRows(16) = m16.loadings;
    auto specs16 = Specs(8, 8);
    auto specs20 = specs16;
    for (const auto& extra : Specs(2, 2)) specs20.push_back(extra);
    std::vector<double> c16(16);
    for (auto& c : c16) c = d(rng);
    auto c20 = c16;
    c20.resize(20, 0.5);
    const auto a = project_acceptance_region(m16, specs16, c16);
    const auto b = project_acceptance_region(m20, specs20, c20);
    EXPECT_TRUE(a.enumerated);
    EXPECT_FALSE(b.enumerated);
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
      EXPECT_NEAR(a.vertices[i].x, b.vertices[i].x, 1e-12);
      EXPECT_NEAR(a.vertices[i].y, b.vertices[i].y, 1e-12);
    }
  }
}

TEST(AcceptanceTest, SupportWalkContainsRandomBoxVertices) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0, 1);
  const auto x = Uniform(rng, 30, 24);
  const auto m = pca_fit(x, 2);
  const auto specs = Specs(12, 12);
  std::vector<double> c(24);
  for (auto& v : c) v = d(rng);
  const auto poly = project_acceptance_region(m, specs, c);
  for (int s = 0; s < 5000; ++s) {
    Eigen::VectorXd v(24);
    for (int j = 0; j < 24; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      v(j) = d(rng) < 0.5 ? poly.lower[jj] : poly.upper[jj];
    }
    const Eigen::VectorXd t = m.project(v);
    ASSERT_TRUE(contains(poly.vertices, {t(0), t(1)}));
  }
}

TEST(AcceptanceTest, Errors) {
  std::mt19937_64 rng(5);
  const auto x = Uniform(rng, 8, 3);
  EXPECT_THROW(project_acceptance_region(pca_fit(x, 1), Specs(1, 2), std::vector<double>{0.5, 0.5, 0.5}), AnalysisError);
  EXPECT_THROW(project_acceptance_region(pca_fit(x, 2), Specs(1, 2), std::vector<double>{0.5, 1.5, 0.5}), ValidationError);
  PcaModel big;
  big.center = Eigen::VectorXd::Zero(31);
  big.loadings = Eigen::MatrixXd::Zero(31, 2);
  EXPECT_THROW(project_acceptance_region(big, Specs(15, 16), std::vector<double>(31, 0.5)), ValidationError);
}

TEST(GroupSummaryTest, IdenticalPointsAndTwoGroups) {
  std::vector<Point2> pts = {{1, 1}, {1, 1}, {1, 1}, {0, 0}, {2, 0}, {0, 2}, {2, 2}};
  std::vector<std::string> g = {"a", "a", "a", "b", "b", "b", "b"};
  const auto s = group_summaries(pts, g);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].group, "a");
  EXPECT_DOUBLE_EQ(s[0].centroid.x, 1.0);
  EXPECT_FALSE(s[0].ellipse);
  EXPECT_EQ(s[0].hull.size(), 1u);
  EXPECT_DOUBLE_EQ(s[1].centroid.x, 1.0);
  EXPECT_DOUBLE_EQ(s[1].centroid.y, 1.0);
  ASSERT_TRUE(s[1].ellipse);
  EXPECT_EQ(s[1].members.size(), 4u);
  const auto single = group_summaries(std::vector<Point2>{{3, 4}}, std::vector<std::string>{"x"});
  EXPECT_FALSE(single[0].ellipse);
  EXPECT_TRUE(single[0].hull.empty());
  EXPECT_DOUBLE_EQ(single[0].centroid.y, 4.0);
}

TEST(GroupSummaryTest, IsotropicGroupHasNearEqualAxes) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> d;
  std::vector<Point2> pts;
  for (int i = 0; i < 200; ++i) pts.push_back({d(rng), d(rng)});
  const auto s = group_summaries(pts, std::vector<std::string>(200, "g"));
  ASSERT_TRUE(s[0].ellipse);
  const auto& e = *s[0].ellipse;
  EXPECT_LT(e.semi_major / e.semi_minor, 1.10);
  EXPECT_NEAR(e.semi_major, std::sqrt(-2 * std::log(0.05)), 0.4);
}

}  // namespace
}  // namespace rumap
