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

#include "rumap/composites.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rumap/error.hpp"
#include "rumap/pareto.hpp"

namespace rumap {
namespace {

NormalizedMatrix TwoBlock(const std::vector<std::vector<double>>& risk, const std::vector<std::vector<double>>& util) {
  NormalizedMatrix nm;
  for (std::size_t j = 0; j < risk[0].size(); ++j)
    nm.specs.push_back({"r" + std::to_string(j), "", Block::Risk, Direction::LowerIsBetter});
  for (std::size_t j = 0; j < util[0].size(); ++j)
    nm.specs.push_back({"u" + std::to_string(j), "", Block::Utility, Direction::HigherIsBetter});
  const std::size_t n = risk.size();
  nm.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(nm.specs.size()));
  for (std::size_t i = 0; i < n; ++i) {
    nm.rows.push_back({"a" + std::to_string(i), std::nullopt, false});
    std::size_t c = 0;
    for (double v : risk[i]) nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c++)) = v;
    for (double v : util[i]) nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c++)) = v;
  }
  return nm;
}

TEST(CompositeScoresTest, MeanAndSampleSd) {
  const auto nm = TwoBlock({{0.7}, {0.1}}, {{0.2, 0.4, 0.6}, {1, 1, 1}});
  const auto s = composite_scores(nm);
  EXPECT_NEAR(s.rows[0].u, 0.4, 1e-15);
  EXPECT_NEAR(s.rows[0].sd_u, 0.2, 1e-15);
  EXPECT_NEAR(s.rows[0].r, 0.7, 1e-15);
  EXPECT_EQ(s.rows[0].sd_r, 0.0);
  EXPECT_EQ(s.rows[1].sd_u, 0.0);
}

TEST(CompositeScoresTest, MatchesRecomputationAndShiftInvariance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto nm = oracle::random_normalized(rng, 8, 3, 4, 16);
    const auto s = composite_scores(nm);
    for (std::size_t i = 0; i < 8; ++i) {
      double sum = 0, sq = 0;
      for (int c = 3; c < 7; ++c) sum += nm.values(static_cast<Eigen::Index>(i), c);
      const double m = sum / 4;
      for (int c = 3; c < 7; ++c) sq += std::pow(nm.values(static_cast<Eigen::Index>(i), c) - m, 2);
      EXPECT_NEAR(s.rows[i].u, m, 1e-14);
      EXPECT_NEAR(s.rows[i].sd_u, std::sqrt(sq / 3), 1e-14);
      EXPECT_GE(s.rows[i].u, 0.0);
      EXPECT_LE(s.rows[i].u, 1.0);
    }
    // Adding a constant to a block shifts U and leaves sd and the front alone.
    std::vector<CompositePoint> before;
    for (std::size_t i = 0; i < 8; ++i) before.push_back({nm.rows[i].id, s.rows[i].u, s.rows[i].r});
    for (int c = 3; c < 7; ++c) nm.values.col(c).array() += 0.25;
    const auto t = composite_scores(nm);
    std::vector<CompositePoint> after;
    for (std::size_t i = 0; i < 8; ++i) {
      EXPECT_NEAR(t.rows[i].u, s.rows[i].u + 0.25, 1e-14);
      EXPECT_NEAR(t.rows[i].sd_u, s.rows[i].sd_u, 1e-14);
      after.push_back({nm.rows[i].id, t.rows[i].u, t.rows[i].r});
    }
    EXPECT_EQ(composite_front(before).front, composite_front(after).front);
  }
}

TEST(CompositeScoresTest, WeightsChangeTheMean) {
  const auto nm = TwoBlock({{0.5}, {0.5}}, {{0.0, 1.0}, {1.0, 0.0}});
  const std::vector<double> w = {1.0, 3.0, 1.0};
  const auto s = composite_scores(nm, w);
  EXPECT_NEAR(s.rows[0].u, 0.25, 1e-15);
  EXPECT_THROW(composite_scores(nm, std::vector<double>{1.0}), ValidationError);
}

TEST(CronbachAlphaTest, IdenticalItemsGiveOne) {
  Eigen::MatrixXd x(5, 3);
  for (int i = 0; i < 5; ++i) x.row(i).setConstant(i * 0.25);
  EXPECT_EQ(cronbach_alpha(x), 1.0);
}

TEST(CronbachAlphaTest, UncorrelatedEqualVarianceGivesZero) {
  Eigen::MatrixXd x(4, 2);
  x << 1, 1, 1, -1, -1, 1, -1, -1;
  EXPECT_NEAR(cronbach_alpha(x), 0.0, 1e-15);
}

TEST(CronbachAlphaTest, InvariantToPermutationAndScaling) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(20, 4);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = g(rng);
  x.col(1) += x.col(0);
  x.col(2) += 0.5 * x.col(0);
  const double a = cronbach_alpha(x);
  Eigen::MatrixXd y(20, 4);
  y << x.col(3), x.col(1), x.col(0), x.col(2);
  EXPECT_NEAR(cronbach_alpha(y), a, 1e-12);
  EXPECT_NEAR(cronbach_alpha(2.5 * x), a, 1e-12);
  EXPECT_LE(a, 1.0);
}

TEST(CronbachAlphaTest, Errors) {
  EXPECT_THROW(cronbach_alpha(Eigen::MatrixXd::Ones(5, 1)), AnalysisError);
  EXPECT_THROW(cronbach_alpha(Eigen::MatrixXd::Ones(1, 3)), AnalysisError);
  EXPECT_THROW(cronbach_alpha(Eigen::MatrixXd::Ones(4, 3)), AnalysisError);
}

TEST(ReliabilityVerdictTest, ThresholdAtPointSeventy) {
  EXPECT_GE(0.72, kAcceptableAlpha);
  // Two items whose alpha is exactly 0.72: alpha = 2 * (1 - 2 / (2 + 2c)) with c = corr.
  const double c = 0.72 / (2 - 0.72);
  const auto x = oracle::one_factor_items({std::sqrt(c), std::sqrt(c)}, 50, 1);
  const auto nm = TwoBlock({{0}, {0}}, {{0, 0}, {0, 0}});
  NormalizedMatrix m = nm;
  m.values.resize(50, 3);
  m.rows.clear();
  for (int i = 0; i < 50; ++i) m.rows.push_back({"a" + std::to_string(i), std::nullopt, false});
  m.values.col(0).setLinSpaced(50, 0, 1);
  m.values.col(1) = x.col(0);
  m.values.col(2) = x.col(1);
  const auto rel = block_reliability(m, Block::Utility);
  ASSERT_TRUE(rel.alpha);
  EXPECT_NEAR(*rel.alpha, 0.72, 1e-12);
  EXPECT_EQ(rel.verdict, Consistency::Acceptable);
  const auto risk = block_reliability(m, Block::Risk);
  EXPECT_FALSE(risk.alpha);
  EXPECT_EQ(risk.verdict, Consistency::Questionable);
}

TEST(OmegaTest, ExactCopiesGiveOne) {
  Eigen::MatrixXd x(6, 3);
  for (int i = 0; i < 6; ++i) x.row(i).setConstant(std::sin(i));
  const auto fit = mcdonald_omega(x);
  ASSERT_TRUE(fit.omega);
  EXPECT_NEAR(*fit.omega, 1.0, 1e-12);
}

TEST(OmegaTest, RecoversKnownLoadings) {
  const std::vector<double> l = {0.8, 0.8, 0.8};
  const auto fit = mcdonald_omega(oracle::one_factor_items(l, 500, 17));
  ASSERT_TRUE(fit.converged);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(fit.loadings(j), 0.8, 1e-4);
  EXPECT_NEAR(*fit.omega, 5.76 / (5.76 + 3 * 0.36), 1e-6);
}

TEST(OmegaTest, HeterogeneousLoadings) {
  const std::vector<double> l = {0.9, 0.7, 0.5, 0.6};
  const auto fit = mcdonald_omega(oracle::one_factor_items(l, 500, 5));
  const double s = 0.9 + 0.7 + 0.5 + 0.6;
  double th = 0;
  for (double v : l) th += 1 - v * v;
  ASSERT_TRUE(fit.omega);
  EXPECT_NEAR(*fit.omega, s * s / (s * s + th), 1e-3);
}

TEST(OmegaTest, EqualsAlphaWhenTauEquivalent) {
  const auto x = oracle::one_factor_items({0.7, 0.7, 0.7, 0.7}, 500, 23);
  EXPECT_NEAR(*mcdonald_omega(x).omega, cronbach_alpha(x), 1e-6);
}

TEST(OmegaTest, UncorrelatedItemsNearZero) {
  const auto exact = oracle::one_factor_items({0.0, 0.0, 0.0}, 200, 3);
  EXPECT_NEAR(*mcdonald_omega(exact).omega, 0.0, 1e-6);
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(500, 4);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = g(rng);
  const auto fit = mcdonald_omega(x);
  if (fit.omega) {
    EXPECT_LT(*fit.omega, 0.2);
  }
}

TEST(OmegaTest, HeywoodCaseIsClampedAndFlagged) {
  Eigen::Matrix3d r;
  r << 1, 0.9, 0.9, 0.9, 1, 0.7, 0.9, 0.7, 1;
  const Eigen::Matrix3d lchol = r.llt().matrixL();
  const auto z = oracle::one_factor_items({0, 0, 0}, 300, 12);  // orthonormal columns
  const Eigen::MatrixXd x = z * lchol.transpose();
  const auto fit = mcdonald_omega(x);
  EXPECT_TRUE(fit.heywood);
  EXPECT_FALSE(fit.warnings.empty());
  for (int j = 0; j < 3; ++j) EXPECT_LE(std::abs(fit.loadings(j)), 1.0);
}

TEST(OmegaTest, Errors) {
  EXPECT_THROW(mcdonald_omega(Eigen::MatrixXd::Ones(5, 1)), AnalysisError);
  EXPECT_THROW(mcdonald_omega(Eigen::MatrixXd::Ones(2, 3)), AnalysisError);
}

TEST(ReliabilityTest, CarriesSmallSampleCaveat) {
  std::mt19937_64 rng(1);
  const auto nm = oracle::random_normalized(rng, 9, 3, 3, 10);
  const auto rep = reliability(nm);
  EXPECT_NE(rep.caveat.find("caution"), std::string::npos);
  EXPECT_EQ(rep.risk.n_items, 3u);
}

}  // namespace
}  // namespace rumap
