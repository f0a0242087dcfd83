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

#ifndef RUMAP_ORDERING_HPP_
#define RUMAP_ORDERING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"

namespace rumap {

enum class Linkage { Complete, Average, Single };

inline const char* to_string(Linkage l) {
  switch (l) {
    case Linkage::Complete: return "complete";
    case Linkage::Average: return "average";
    case Linkage::Single: return "single";
  }
  return "complete";
}

inline Linkage parse_linkage(std::string_view s) {
  if (s == "complete") return Linkage::Complete;
  if (s == "average") return Linkage::Average;
  if (s == "single") return Linkage::Single;
  throw ValidationError("unknown linkage '" + std::string(s) + "'; expected complete|average|single");
}

// Node ids follow the usual convention: leaves are 0..n-1, the cluster
// created by merge s is n + s.
struct Merge {
  std::size_t left = 0;  // child whose smallest leaf index is lower
  std::size_t right = 0;
  double height = 0.0;
  std::size_t size = 0;
};

struct Dendrogram {
  std::size_t leaves = 0;
  std::vector<Merge> merges;
  std::vector<std::size_t> order;  // leaf order, left subtree first
};

inline Eigen::MatrixXd euclidean_distances(const Eigen::MatrixXd& rows) {
  const Eigen::Index n = rows.rows();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) d(i, j) = d(j, i) = (rows.row(i) - rows.row(j)).norm();
  return d;
}

// Agglomerative clustering with Lance-Williams updates. At equal distance the
// pair with the lexicographically smallest (min-leaf, min-leaf) key merges
// first.
inline Dendrogram hclust(const Eigen::MatrixXd& rows, Linkage linkage = Linkage::Complete) {
  const auto n = static_cast<std::size_t>(rows.rows());
  if (n < 2) throw ValidationError("clustering needs at least 2 rows");
  Eigen::MatrixXd d = euclidean_distances(rows);

  // Active clusters are addressed by slot; slot i starts as leaf i.
  std::vector<bool> active(n, true);
  std::vector<std::size_t> node(n), size(n, 1), min_leaf(n);
  for (std::size_t i = 0; i < n; ++i) node[i] = min_leaf[i] = i;

  Dendrogram out;
  out.leaves = n;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || min_leaf[j] <= min_leaf[i]) continue;
        const double dij = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        const bool better =
            dij < best || (dij == best && (min_leaf[i] < min_leaf[bi] ||
                                           (min_leaf[i] == min_leaf[bi] && min_leaf[j] < min_leaf[bj])));
        if (better) {
          best = dij;
          bi = i;
          bj = j;
        }
      }
    }
    out.merges.push_back({node[bi], node[bj], best, size[bi] + size[bj]});
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const auto ki = static_cast<Eigen::Index>(k);
      const double a = d(static_cast<Eigen::Index>(bi), ki);
      const double b = d(static_cast<Eigen::Index>(bj), ki);
      double v = 0.0;
      switch (linkage) {
        case Linkage::Complete: v = std::max(a, b); break;
        case Linkage::Single: v = std::min(a, b); break;
        case Linkage::Average:
          v = (static_cast<double>(size[bi]) * a + static_cast<double>(size[bj]) * b) /
              static_cast<double>(size[bi] + size[bj]);
          break;
      }
      d(static_cast<Eigen::Index>(bi), ki) = d(ki, static_cast<Eigen::Index>(bi)) = v;
    }
    active[bj] = false;
    node[bi] = n + step;
    size[bi] += size[bj];
    min_leaf[bi] = std::min(min_leaf[bi], min_leaf[bj]);
  }

  // Iterative depth-first walk from the root, left child first.
  std::vector<std::size_t> stack{n + out.merges.size() - 1};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    if (id < n) {
      out.order.push_back(id);
      continue;
    }
    const auto& m = out.merges[id - n];
    stack.push_back(m.right);
    stack.push_back(m.left);
  }
  return out;
}

}  // namespace rumap

#endif  // RUMAP_ORDERING_HPP_
