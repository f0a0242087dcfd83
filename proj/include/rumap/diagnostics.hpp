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

// Score-distance / orthogonal-distance diagnostics and a simplified robust
// PCA (Stahel-Donoho outlyingness, h-subset refit).

#ifndef RUMAP_DIAGNOSTICS_HPP_
#define RUMAP_DIAGNOSTICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"
#include "rumap/pca.hpp"
#include "rumap/stats.hpp"

namespace rumap {

enum class OdCutMode { Hubert, Literal };

inline const char* to_string(OdCutMode m) { return m == OdCutMode::Hubert ? "hubert" : "literal"; }

enum class OutlierFlag { Regular, GoodLeverage, OrthogonalOutlier, BadLeverage };

inline const char* to_string(OutlierFlag f) {
  switch (f) {
    case OutlierFlag::Regular: return "regular";
    case OutlierFlag::GoodLeverage: return "good_leverage";
    case OutlierFlag::OrthogonalOutlier: return "orthogonal_outlier";
    case OutlierFlag::BadLeverage: return "bad_leverage";
  }
  return "regular";
}

// SD-OD quadrants.
inline OutlierFlag classify(bool sd_high, bool od_high) {
  if (sd_high) return od_high ? OutlierFlag::BadLeverage : OutlierFlag::GoodLeverage;
  return od_high ? OutlierFlag::OrthogonalOutlier : OutlierFlag::Regular;
}

struct SdOdDiagnostics {
  std::vector<double> sd;
  std::vector<double> od;
  std::vector<OutlierFlag> flags;
  double sd_cut = 0.0;
  double od_cut = 0.0;
  OdCutMode mode = OdCutMode::Hubert;
  std::size_t components_used = 0;
  // Every OD is numerically zero; no observation can be OD-high.
  bool od_degenerate = false;
  std::vector<std::string> warnings;
};

inline constexpr double kMinEigenvalue = 1e-12;
inline constexpr double kZeroOrthogonalDistance = 1e-10;
inline constexpr double kCutoffQuantile = 0.975;

// Cutoff on OD. Hubert: (med + mad * z)^(3/2) on OD^(2/3), the Wilson-Hilferty
// transform. Literal: med + mad * z on OD itself. `mad` is the
// normal-consistent MAD in both modes.
inline double od_cutoff(std::span<const double> od, OdCutMode mode) {
  const double z = stats::normal_quantile(kCutoffQuantile);
  if (mode == OdCutMode::Hubert) {
    std::vector<double> w;
    w.reserve(od.size());
    for (double v : od) w.push_back(std::cbrt(v * v));
    const double med = stats::median(w);
    const double s = stats::kMadToSigma * stats::mad(w);
    return std::pow(med + s * z, 1.5);
  }
  const double med = stats::median(od);
  return med + stats::kMadToSigma * stats::mad(od) * z;
}

// SD_i = sqrt(sum_j t_ij^2 / l_j) over components with l_j > 1e-12,
// OD_i = ||x_i - mu - P t_i||. `data` rows are observations in the model's
// measure space.
inline SdOdDiagnostics sd_od(const PcaModel& model, const Eigen::MatrixXd& data,
                             OdCutMode mode = OdCutMode::Hubert) {
  if (data.cols() != model.center.size())
    throw AnalysisError("sd_od: data width does not match the model");
  SdOdDiagnostics d;
  d.mode = mode;
  std::vector<Eigen::Index> used;
  for (Eigen::Index j = 0; j < model.eigenvalues.size(); ++j) {
    if (model.eigenvalues(j) > kMinEigenvalue)
      used.push_back(j);
    else
      d.warnings.push_back("component " + std::to_string(j + 1) +
                           " has a near-zero eigenvalue and is dropped from SD");
  }
  d.components_used = used.size();
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    const Eigen::VectorXd x = data.row(i).transpose();
    const Eigen::VectorXd t = model.project(x);
    double s = 0.0;
    for (auto j : used) s += t(j) * t(j) / model.eigenvalues(j);
    d.sd.push_back(std::sqrt(s));
    d.od.push_back((x - model.reconstruct(t)).norm());
  }
  d.sd_cut = used.empty() ? 0.0
                          : std::sqrt(stats::chi2_quantile(static_cast<double>(used.size()),
                                                           kCutoffQuantile));
  const double max_od = d.od.empty() ? 0.0 : *std::max_element(d.od.begin(), d.od.end());
  d.od_degenerate = max_od <= kZeroOrthogonalDistance;
  if (d.od_degenerate) {
    d.od_cut = 0.0;
    d.warnings.push_back("all orthogonal distances are zero; OD cutoff is degenerate");
  } else {
    d.od_cut = od_cutoff(d.od, mode);
  }
  for (std::size_t i = 0; i < d.sd.size(); ++i) {
    const bool sd_high = !used.empty() && d.sd[i] > d.sd_cut;
    const bool od_high = !d.od_degenerate && d.od[i] > d.od_cut + kZeroOrthogonalDistance;
    d.flags.push_back(classify(sd_high, od_high));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Robust PCA

struct RobustPcaOptions {
  std::uint64_t seed = 42;
  double coverage = 0.75;              // h = ceil(coverage * n)
  std::size_t all_pairs_limit = 50;    // use every point pair up to this n
  std::size_t random_directions = 250; // otherwise this many seeded pairs
  // Refit on every row whose OD under the h-subset model is within the cutoff.
  bool reweight = true;
  OdCutMode od_cut_mode = OdCutMode::Hubert;
};

struct RobustPca {
  PcaModel model;                   // fitted on the h-subset, scores for all rows
  std::vector<double> outlyingness; // Stahel-Donoho outlyingness per row
  std::vector<std::size_t> subset;  // h least outlying rows, ascending
  std::vector<std::size_t> fitted;  // rows of the final fit, ascending
  std::size_t directions_used = 0;
};

inline RobustPca robust_pca(const Eigen::MatrixXd& data, std::size_t k,
                            RobustPcaOptions opts = {}) {
  const Eigen::Index n = data.rows();
  if (n < 4) throw AnalysisError("robust PCA needs at least 4 observations");

  // Affine span of the data.
  const Eigen::RowVectorXd mean = data.colwise().mean();
  const Eigen::MatrixXd centered = data.rowwise() - mean;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double tol = sv.size() > 0 ? sv(0) * static_cast<double>(std::max(n, data.cols())) *
                                         std::numeric_limits<double>::epsilon()
                                   : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > tol) ++r;
  if (r < static_cast<Eigen::Index>(k))
    throw AnalysisError("robust PCA: data span only " + std::to_string(r) +
                        " dimensions, fewer than k = " + std::to_string(k));
  const Eigen::MatrixXd z = centered * svd.matrixV().leftCols(r);

  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  if (static_cast<std::size_t>(n) <= opts.all_pairs_limit) {
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    while (pairs.size() < opts.random_directions) {
      const Eigen::Index a = pick(rng), b = pick(rng);
      if (a != b) pairs.emplace_back(a, b);
    }
  }

  RobustPca out;
  out.outlyingness.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> proj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : pairs) {
    const Eigen::VectorXd dir = (z.row(a) - z.row(b)).transpose();
    const double len = dir.norm();
    if (len <= 1e-12) continue;
    const Eigen::VectorXd y = z * (dir / len);
    for (Eigen::Index i = 0; i < n; ++i) proj[static_cast<std::size_t>(i)] = y(i);
    const double med = stats::median(proj);
    const double mad = stats::mad(proj);
    if (mad <= 1e-12) continue;
    ++out.directions_used;
    for (std::size_t i = 0; i < proj.size(); ++i)
      out.outlyingness[i] = std::max(out.outlyingness[i], std::abs(proj[i] - med) / mad);
  }
  if (out.directions_used == 0)
    throw AnalysisError("robust PCA: every projection direction has zero MAD");

  auto h = static_cast<std::size_t>(std::ceil(opts.coverage * static_cast<double>(n)));
  h = std::clamp<std::size_t>(h, k + 1, static_cast<std::size_t>(n));
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.outlyingness[a] < out.outlyingness[b];
  });
  out.subset.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h));
  std::sort(out.subset.begin(), out.subset.end());

  Eigen::MatrixXd sub(static_cast<Eigen::Index>(h), data.cols());
  for (std::size_t i = 0; i < h; ++i)
    sub.row(static_cast<Eigen::Index>(i)) = data.row(static_cast<Eigen::Index>(out.subset[i]));
  const auto kfit = std::min<std::size_t>(k, std::min<std::size_t>(h - 1, data.cols()));
  out.model = pca_fit(sub, kfit);
  out.model.scores = (data.rowwise() - out.model.center.transpose()) * out.model.loadings;
  out.fitted = out.subset;
  if (!opts.reweight) return out;

  const auto diag = sd_od(out.model, data, opts.od_cut_mode);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < diag.od.size(); ++i)
    if (diag.od_degenerate || diag.od[i] <= diag.od_cut) keep.push_back(i);
  if (keep.size() < kfit + 1 || keep == out.subset) return out;
  Eigen::MatrixXd rw(static_cast<Eigen::Index>(keep.size()), data.cols());
  for (std::size_t i = 0; i < keep.size(); ++i)
    rw.row(static_cast<Eigen::Index>(i)) = data.row(static_cast<Eigen::Index>(keep[i]));
  PcaModel refit = pca_fit(rw, std::min<std::size_t>(kfit, keep.size() - 1));
  if (refit.components() < kfit) return out;
  refit.scores = (data.rowwise() - refit.center.transpose()) * refit.loadings;
  out.model = std::move(refit);
  out.fitted = std::move(keep);
  return out;
}

}  // namespace rumap

#endif  // RUMAP_DIAGNOSTICS_HPP_
