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

#ifndef RUMAP_COMPOSITES_HPP_
#define RUMAP_COMPOSITES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/stats.hpp"

namespace rumap {

struct CompositeScore {
  double u = 0.0;
  double r = 0.0;
  double sd_u = 0.0;  // sample sd across the block's columns
  double sd_r = 0.0;
};

struct CompositeScores {
  std::vector<CompositeScore> rows;

  std::vector<double> utility() const {
    std::vector<double> out;
    for (const auto& s : rows) out.push_back(s.u);
    return out;
  }
  std::vector<double> risk() const {
    std::vector<double> out;
    for (const auto& s : rows) out.push_back(s.r);
    return out;
  }
};

namespace detail {

inline void block_mean_sd(const NormalizedMatrix& nm, Eigen::Index row,
                          std::span<const std::size_t> cols, std::span<const double> weights,
                          double& mean, double& sd) {
  std::vector<double> v;
  double wsum = 0.0, acc = 0.0;
  for (auto c : cols) {
    const double x = nm.values(row, static_cast<Eigen::Index>(c));
    const double w = weights.empty() ? 1.0 : weights[c];
    v.push_back(x);
    acc += w * x;
    wsum += w;
  }
  mean = acc / wsum;
  sd = stats::stddev(v);
}

}  // namespace detail

// Block means of the normalized matrix. `weights`, when given, holds one
// non-negative weight per measure (matrix column order); default is equal
// weighting.
inline CompositeScores composite_scores(const NormalizedMatrix& nm,
                                        std::span<const double> weights = {}) {
  if (!weights.empty() && weights.size() != nm.num_measures())
    throw ValidationError("composite weights do not match the number of measures");
  const auto ucols = nm.block_columns(Block::Utility);
  const auto rcols = nm.block_columns(Block::Risk);
  for (const auto* cols : {&ucols, &rcols}) {
    double w = 0.0;
    for (auto c : *cols) w += weights.empty() ? 1.0 : weights[c];
    if (cols->empty() || !(w > 0.0))
      throw ValidationError("each block needs at least one measure with positive weight");
  }
  CompositeScores out;
  for (std::size_t i = 0; i < nm.num_rows(); ++i) {
    CompositeScore s;
    detail::block_mean_sd(nm, static_cast<Eigen::Index>(i), ucols, weights, s.u, s.sd_u);
    detail::block_mean_sd(nm, static_cast<Eigen::Index>(i), rcols, weights, s.r, s.sd_r);
    out.rows.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Internal consistency

inline constexpr double kAcceptableAlpha = 0.70;

// alpha = k / (k - 1) * (1 - sum var(item) / var(total)), sample variances.
inline double cronbach_alpha(const Eigen::MatrixXd& items) {
  const Eigen::Index n = items.rows();
  const Eigen::Index k = items.cols();
  if (k < 2) throw AnalysisError("Cronbach's alpha needs at least 2 items");
  if (n < 2) throw AnalysisError("Cronbach's alpha needs at least 2 rows");
  auto var = [](const Eigen::VectorXd& v) {
    return stats::variance(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
  };
  double item_var = 0.0;
  for (Eigen::Index j = 0; j < k; ++j) item_var += var(items.col(j));
  const double total_var = var(items.rowwise().sum());
  if (!(total_var > 0.0)) throw AnalysisError("Cronbach's alpha undefined: total score has zero variance");
  const double kd = static_cast<double>(k);
  return kd / (kd - 1.0) * (1.0 - item_var / total_var);
}

struct OmegaFit {
  std::optional<double> omega;  // empty when factoring did not converge
  Eigen::VectorXd loadings;     // standardized one-factor loadings, sum >= 0
  int iterations = 0;
  bool converged = false;
  bool heywood = false;
  std::vector<std::string> warnings;
};

struct OmegaOptions {
  double tolerance = 1e-8;
  int max_iterations = 200;
};

inline Eigen::MatrixXd correlation_matrix(const Eigen::MatrixXd& x) {
  const double n = static_cast<double>(x.rows());
  const Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
  const Eigen::MatrixXd cov = centered.transpose() * centered / (n - 1.0);
  const Eigen::VectorXd sd = cov.diagonal().cwiseSqrt();
  for (Eigen::Index j = 0; j < sd.size(); ++j)
    if (!(sd(j) > 0.0)) throw AnalysisError("item " + std::to_string(j) + " has zero variance");
  Eigen::MatrixXd corr = cov.array() / (sd * sd.transpose()).array();
  corr.diagonal().setOnes();
  return corr;
}

// One-factor model fitted by iterated principal-axis factoring on the item
// correlation matrix; omega = (sum l)^2 / ((sum l)^2 + sum (1 - l^2)).
inline OmegaFit mcdonald_omega(const Eigen::MatrixXd& items, OmegaOptions opts = {}) {
  const Eigen::Index k = items.cols();
  if (k < 2) throw AnalysisError("McDonald's omega needs at least 2 items");
  if (items.rows() < 3) throw AnalysisError("McDonald's omega needs at least 3 rows");
  const Eigen::MatrixXd corr = correlation_matrix(items);

  // Starting communalities: squared multiple correlations, or the largest
  // absolute correlation per item when the matrix is singular.
  Eigen::VectorXd h(k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(corr);
  if (full.eigenvalues().minCoeff() > 1e-10) {
    const Eigen::MatrixXd inv = corr.inverse();
    for (Eigen::Index j = 0; j < k; ++j) h(j) = 1.0 - 1.0 / inv(j, j);
  } else {
    for (Eigen::Index j = 0; j < k; ++j) {
      double m = 0.0;
      for (Eigen::Index l = 0; l < k; ++l)
        if (l != j) m = std::max(m, std::abs(corr(j, l)));
      h(j) = m;
    }
  }

  OmegaFit fit;
  Eigen::VectorXd loadings = Eigen::VectorXd::Zero(k);
  for (int it = 1; it <= opts.max_iterations; ++it) {
    Eigen::MatrixXd reduced = corr;
    reduced.diagonal() = h;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(reduced);
    const double top = std::max(es.eigenvalues()(k - 1), 0.0);
    loadings = std::sqrt(top) * es.eigenvectors().col(k - 1);
    Eigen::VectorXd next = loadings.cwiseAbs2();
    for (Eigen::Index j = 0; j < k; ++j) {
      if (next(j) > 1.0) {
        next(j) = 1.0;
        fit.heywood = true;
      }
    }
    const double step = (next - h).cwiseAbs().maxCoeff();
    h = next;
    fit.iterations = it;
    if (step < opts.tolerance) {
      fit.converged = true;
      break;
    }
  }
  if (loadings.sum() < 0.0) loadings = -loadings;
  for (Eigen::Index j = 0; j < k; ++j) loadings(j) = std::clamp(loadings(j), -1.0, 1.0);
  fit.loadings = loadings;
  if (fit.heywood) fit.warnings.push_back("Heywood case: a communality exceeded 1 and was clamped");
  if (!fit.converged) {
    fit.warnings.push_back("principal-axis factoring did not converge in " +
                           std::to_string(opts.max_iterations) + " iterations; omega omitted");
    return fit;
  }
  const double s = loadings.sum();
  const double uniq = (1.0 - loadings.cwiseAbs2().array()).sum();
  fit.omega = s * s / (s * s + uniq);
  return fit;
}

enum class Consistency { Acceptable, Questionable };

inline const char* to_string(Consistency c) {
  return c == Consistency::Acceptable ? "acceptable" : "questionable";
}

struct BlockReliability {
  Block block = Block::Utility;
  std::size_t n_items = 0;
  std::optional<double> alpha;
  std::optional<double> omega;
  Consistency verdict = Consistency::Questionable;
  std::vector<std::string> notes;
};

struct ReliabilityReport {
  BlockReliability risk;
  BlockReliability utility;
  std::string caveat;
};

inline BlockReliability block_reliability(const NormalizedMatrix& nm, Block b) {
  BlockReliability out;
  out.block = b;
  const Eigen::MatrixXd items = nm.block(b);
  out.n_items = static_cast<std::size_t>(items.cols());
  try {
    out.alpha = cronbach_alpha(items);
  } catch (const AnalysisError& e) {
    out.notes.push_back(std::string("alpha: ") + e.what());
  }
  try {
    auto fit = mcdonald_omega(items);
    out.omega = fit.omega;
    for (auto& w : fit.warnings) out.notes.push_back("omega: " + w);
  } catch (const AnalysisError& e) {
    out.notes.push_back(std::string("omega: ") + e.what());
  }
  out.verdict = out.alpha && *out.alpha >= kAcceptableAlpha ? Consistency::Acceptable
                                                            : Consistency::Questionable;
  return out;
}

inline ReliabilityReport reliability(const NormalizedMatrix& nm) {
  ReliabilityReport out;
  out.risk = block_reliability(nm, Block::Risk);
  out.utility = block_reliability(nm, Block::Utility);
  out.caveat = "computed from " + std::to_string(nm.num_rows()) +
               " approaches; with so few rows alpha and omega are rough heuristics, "
               "interpret with caution";
  return out;
}

}  // namespace rumap

#endif  // RUMAP_COMPOSITES_HPP_
