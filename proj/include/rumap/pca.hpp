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

// Classical PCA on the normalized measure matrix together with the
// interpretation aids built on it: optional U/R orientation, PC1 alignment
// with the composites and per-block PCA.

#ifndef RUMAP_PCA_HPP_
#define RUMAP_PCA_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/stats.hpp"

namespace rumap {

struct PcaModel {
  Eigen::VectorXd center;                    // p
  Eigen::MatrixXd loadings;                  // p x k, orthonormal columns
  Eigen::VectorXd eigenvalues;               // k, non-increasing
  Eigen::VectorXd all_eigenvalues;           // every non-trivial component
  Eigen::VectorXd explained_variance_ratio;  // k
  Eigen::MatrixXd scores;                    // n x k
  std::size_t rank = 0;
  std::vector<std::string> warnings;

  std::size_t components() const { return static_cast<std::size_t>(loadings.cols()); }

  // t = P^T (x - mu)
  Eigen::VectorXd project(const Eigen::VectorXd& x) const {
    return loadings.transpose() * (x - center);
  }

  Eigen::VectorXd reconstruct(const Eigen::VectorXd& t) const { return center + loadings * t; }
};

namespace detail {

// Flips each column so that its largest-magnitude entry is non-negative.
inline void fix_signs(Eigen::MatrixXd& loadings) {
  for (Eigen::Index c = 0; c < loadings.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < loadings.rows(); ++r) {
      if (std::abs(loadings(r, c)) > best) {
        best = std::abs(loadings(r, c));
        arg = r;
      }
    }
    if (loadings(arg, c) < 0.0) loadings.col(c) *= -1.0;
  }
}

inline std::span<const double> as_span(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace detail

// PCA via SVD of the column-centered data. Eigenvalues are s^2 / (n - 1).
// The input is used as-is; no further scaling is applied.
inline PcaModel pca_fit(const Eigen::MatrixXd& data, std::size_t k) {
  const Eigen::Index n = data.rows();
  const Eigen::Index p = data.cols();
  if (n < 2) throw AnalysisError("PCA needs at least 2 observations");
  const auto kmax = static_cast<std::size_t>(std::min<Eigen::Index>(n - 1, p));
  if (k < 1 || k > kmax)
    throw AnalysisError("PCA component count " + std::to_string(k) + " outside [1, " +
                        std::to_string(kmax) + "]");

  PcaModel m;
  m.center = data.colwise().mean().transpose();
  const Eigen::MatrixXd centered = data.rowwise() - m.center.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double tol = sv.size() > 0 ? sv(0) * static_cast<double>(std::max(n, p)) *
                                         std::numeric_limits<double>::epsilon()
                                   : 0.0;
  std::size_t rank = 0;
  for (Eigen::Index j = 0; j < sv.size(); ++j)
    if (sv(j) > tol) ++rank;
  if (rank == 0) throw AnalysisError("PCA input has zero variance");
  m.rank = rank;
  if (rank < k) {
    m.warnings.push_back("rank-deficient input: usable components reduced from " +
                         std::to_string(k) + " to " + std::to_string(rank));
    k = rank;
  }
  const auto kk = static_cast<Eigen::Index>(k);
  const auto rr = static_cast<Eigen::Index>(rank);
  const double dof = static_cast<double>(n - 1);
  m.all_eigenvalues = sv.head(rr).cwiseAbs2() / dof;
  m.eigenvalues = m.all_eigenvalues.head(kk);
  m.explained_variance_ratio = m.eigenvalues / m.all_eigenvalues.sum();
  m.loadings = svd.matrixV().leftCols(kk);
  detail::fix_signs(m.loadings);
  m.scores = centered * m.loadings;
  return m;
}

// Optional sign convention corr(t1, U) >= 0 and corr(t2, -R) >= 0. Disabled
// leaves the model untouched.
inline PcaModel orient(PcaModel model, std::span<const double> u, std::span<const double> r,
                       bool enabled) {
  if (!enabled) return model;
  const auto flip = [&](Eigen::Index c) {
    model.scores.col(c) *= -1.0;
    model.loadings.col(c) *= -1.0;
  };
  if (model.components() >= 1) {
    const Eigen::VectorXd t1 = model.scores.col(0);
    if (stats::pearson(detail::as_span(t1), u) < 0.0) flip(0);
  }
  if (model.components() >= 2) {
    const Eigen::VectorXd t2 = model.scores.col(1);
    std::vector<double> neg_r(r.begin(), r.end());
    for (double& v : neg_r) v = -v;
    if (stats::pearson(detail::as_span(t2), neg_r) < 0.0) flip(1);
  }
  return model;
}

struct AlignmentReport {
  double rho_u = 0.0;
  double rho_r = 0.0;
  double rho_u2 = 0.0;
  double rho_r2 = 0.0;
  double r2_joint = 0.0;
  double pc1_explained_variance_ratio = 0.0;
  bool collinear_composites = false;  // least squares solved by pseudoinverse
  std::size_t n = 0;
};

inline constexpr double kCollinearCorrelation = 1.0 - 1e-10;

// Correlations of the PC1 scores with U and R, and R^2 of the OLS fit
// t1 = b0 + bU U + bR R.
inline AlignmentReport alignment(const PcaModel& model, std::span<const double> u,
                                 std::span<const double> r) {
  const auto n = static_cast<std::size_t>(model.scores.rows());
  if (u.size() != n || r.size() != n)
    throw AnalysisError("alignment: composite vectors do not match the score count");
  if (model.components() < 1) throw AnalysisError("alignment needs at least one component");
  const Eigen::VectorXd t1 = model.scores.col(0);
  AlignmentReport rep;
  rep.n = n;
  rep.rho_u = stats::pearson(detail::as_span(t1), u);
  rep.rho_r = stats::pearson(detail::as_span(t1), r);
  rep.rho_u2 = rep.rho_u * rep.rho_u;
  rep.rho_r2 = rep.rho_r * rep.rho_r;
  rep.pc1_explained_variance_ratio = model.explained_variance_ratio(0);
  const double ur = stats::pearson(u, r);
  rep.collinear_composites = !std::isfinite(ur) || std::abs(ur) > kCollinearCorrelation;

  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), 3);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    x(row, 0) = 1.0;
    x(row, 1) = u[i];
    x(row, 2) = r[i];
  }
  Eigen::VectorXd beta;
  if (rep.collinear_composites)
    beta = x.completeOrthogonalDecomposition().solve(t1);
  else
    beta = x.colPivHouseholderQr().solve(t1);
  const Eigen::VectorXd resid = t1 - x * beta;
  const double sse = resid.squaredNorm();
  const double sst = (t1.array() - t1.mean()).matrix().squaredNorm();
  rep.r2_joint = sst > 0.0 ? 1.0 - sse / sst : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

// ---------------------------------------------------------------------------
// Blockwise PCA

struct BlockAxis {
  Block block = Block::Utility;
  std::vector<std::size_t> columns;  // measure indices in the normalized matrix
  Eigen::VectorXd scores;            // PC1 score per row
  std::vector<double> loadings;      // PC1 loading per measure
  std::vector<double> contributions; // loading^2 / sum loading^2
  double explained_variance_ratio = 1.0;
  // Single-measure block: the axis is the normalized column itself.
  bool fallback = false;
};

struct BlockwiseResult {
  BlockAxis utility;
  BlockAxis risk;
};

inline BlockAxis block_axis(const NormalizedMatrix& nm, Block b) {
  BlockAxis axis;
  axis.block = b;
  axis.columns = nm.block_columns(b);
  const Eigen::MatrixXd data = nm.block(b);
  if (axis.columns.size() == 1) {
    axis.fallback = true;
    axis.scores = data.col(0);
    axis.loadings = {1.0};
    axis.contributions = {1.0};
    return axis;
  }
  const PcaModel m = pca_fit(data, 1);
  axis.scores = m.scores.col(0);
  axis.explained_variance_ratio = m.explained_variance_ratio(0);
  const double ss = m.loadings.col(0).squaredNorm();
  for (Eigen::Index j = 0; j < m.loadings.rows(); ++j) {
    axis.loadings.push_back(m.loadings(j, 0));
    axis.contributions.push_back(m.loadings(j, 0) * m.loadings(j, 0) / ss);
  }
  return axis;
}

// Separate one-component PCA on the utility block and on the risk block.
inline BlockwiseResult blockwise_pca(const NormalizedMatrix& nm) {
  return {block_axis(nm, Block::Utility), block_axis(nm, Block::Risk)};
}

}  // namespace rumap

#endif  // RUMAP_PCA_HPP_
