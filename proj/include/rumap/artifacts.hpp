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

// JSON documents emitted by the CLI subcommands and the report.

#ifndef RUMAP_ARTIFACTS_HPP_
#define RUMAP_ARTIFACTS_HPP_

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rumap/config.hpp"
#include "rumap/pipeline.hpp"

namespace rumap {

namespace detail {

inline Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json opt_num(const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); }

inline Json vec(const Eigen::VectorXd& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(num(v(i)));
  return j;
}

inline Json mat(const Eigen::MatrixXd& m) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(num(m(i, c)));
    j.push_back(row);
  }
  return j;
}

inline Json slope(bool defined, double s) { return defined ? num(s) : Json(nullptr); }

inline Json ids(const Analysis& a, const std::vector<std::size_t>& rows) {
  Json j = Json::array();
  for (auto i : rows) j.push_back(a.labels[i]);
  return j;
}

inline Json measure_json(const MeasureSpec& s) {
  return Json{{"id", s.id}, {"display_name", s.display_name}, {"block", to_string(s.block)},
              {"direction", to_string(s.direction)}};
}

}  // namespace detail

inline Json normalized_json(const Analysis& a) {
  using namespace detail;
  const auto& nm = a.nm;
  Json j;
  j["measures"] = Json::array();
  for (std::size_t c = 0; c < nm.num_measures(); ++c) {
    Json m = measure_json(nm.specs[c]);
    m["raw_min"] = num(nm.raw_min[c]);
    m["raw_max"] = num(nm.raw_max[c]);
    j["measures"].push_back(m);
  }
  j["rows"] = Json::array();
  for (std::size_t i = 0; i < nm.num_rows(); ++i) {
    Json r;
    r["id"] = nm.rows[i].id;
    r["dataset"] = nm.rows[i].dataset ? Json(*nm.rows[i].dataset) : Json(nullptr);
    r["is_reference"] = nm.rows[i].is_reference;
    r["values"] = Json::object();
    for (std::size_t c = 0; c < nm.num_measures(); ++c)
      r["values"][nm.specs[c].id] = num(nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)));
    j["rows"].push_back(r);
  }
  j["warnings"] = nm.warnings;
  Json h;
  h["linkage"] = to_string(a.config.options.linkage);
  h["metric"] = "euclidean";
  h["leaf_order"] = ids(a, a.dendrogram.order);
  h["merges"] = Json::array();
  for (const auto& m : a.dendrogram.merges)
    h["merges"].push_back(Json{{"left", m.left}, {"right", m.right}, {"height", num(m.height)}, {"size", m.size}});
  j["heatmap"] = h;
  return j;
}

inline Json pareto_json(const Analysis& a) {
  using namespace detail;
  Json j;
  j["pareto_full"] = ids(a, a.pareto.members);
  j["pareto_composite"] = ids(a, a.front_rows);
  if (a.knee)
    j["knee"] = Json{{"id", a.knee->id}, {"distance", num(a.knee->distance)}, {"concave", a.knee->concave}};
  else
    j["knee"] = nullptr;
  j["front"] = Json::array();
  for (auto i : a.front_rows)
    j["front"].push_back(Json{{"id", a.labels[i]}, {"U", num(a.points[i].u)}, {"R", num(a.points[i].r)}});
  j["edges"] = Json::array();
  for (const auto& e : a.edges)
    j["edges"].push_back(Json{{"from", a.labels[a.front_rows[e.from]]},
                              {"to", a.labels[a.front_rows[e.to]]},
                              {"dU", num(e.du)},
                              {"dR", num(e.dr)},
                              {"slope", slope(e.slope_defined, e.slope)}});
  j["rays"] = Json::array();
  for (const auto& rr : a.rays)
    j["rays"].push_back(Json{{"id", a.labels[rr.row]},
                             {"reference", a.labels[rr.reference_row]},
                             {"dU", num(rr.ray.du)},
                             {"dR", num(rr.ray.dr)},
                             {"slope", slope(rr.ray.slope_defined, rr.ray.slope)},
                             {"L2", num(rr.ray.l2)}});
  Json dom = Json::array();
  for (std::size_t i = 0; i < a.pareto.dominance.size(); ++i)
    for (std::size_t k = 0; k < a.pareto.dominance[i].size(); ++k)
      if (a.pareto.dominance[i][k]) dom.push_back(Json::array({a.labels[i], a.labels[k]}));
  j["dominance"] = dom;
  return j;
}

inline Json reliability_json(const BlockReliability& b) {
  using namespace detail;
  return Json{{"n_items", b.n_items}, {"alpha", opt_num(b.alpha)}, {"omega", opt_num(b.omega)},
              {"verdict", to_string(b.verdict)}, {"notes", b.notes}};
}

inline Json composite_json(const Analysis& a) {
  using namespace detail;
  Json j;
  j["scores"] = Json::array();
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto& s = a.composites.rows[i];
    j["scores"].push_back(Json{{"id", a.labels[i]}, {"U", num(s.u)}, {"R", num(s.r)},
                               {"sd_U", num(s.sd_u)}, {"sd_R", num(s.sd_r)}});
  }
  j["reliability"] = Json{{"risk", reliability_json(a.reliability.risk)},
                          {"utility", reliability_json(a.reliability.utility)}};
  j["caveat"] = a.reliability.caveat;
  j["weights"] = Json::object();
  for (std::size_t c = 0; c < a.nm.num_measures(); ++c)
    j["weights"][a.nm.specs[c].id] = a.weights.empty() ? 1.0 : a.weights[c];
  return j;
}

inline Json block_axis_json(const Analysis& a, const BlockAxis& ax) {
  using namespace detail;
  Json m = Json::array();
  for (std::size_t s = 0; s < ax.columns.size(); ++s)
    m.push_back(Json{{"id", a.nm.specs[ax.columns[s]].id},
                     {"loading", num(ax.loadings[s])},
                     {"sign", ax.loadings[s] >= 0.0 ? "positive" : "negative"},
                     {"contribution", num(ax.contributions[s])}});
  return Json{{"measures", m}, {"explained_variance_ratio", num(ax.explained_variance_ratio)},
              {"fallback", ax.fallback}, {"scores", vec(ax.scores)}};
}

inline Json pca_model_json(const PcaModel& m) {
  using namespace detail;
  return Json{{"center", vec(m.center)},
              {"loadings", mat(m.loadings)},
              {"eigenvalues", vec(m.eigenvalues)},
              {"explained_variance_ratio", vec(m.explained_variance_ratio)},
              {"rank", m.rank},
              {"warnings", m.warnings}};
}

inline Json pca_json(const Analysis& a) {
  using namespace detail;
  Json j;
  j["rows"] = ids(a, a.pca_rows);
  j["model"] = pca_model_json(a.pca);
  j["measures"] = Json::array();
  for (const auto& s : a.nm.specs) j["measures"].push_back(s.id);
  j["orientation"] = a.config.options.orient ? "oriented" : "native";
  j["scores"] = mat(a.pca.scores);
  const auto& al = a.alignment;
  j["alignment"] = Json{{"rho_U", num(al.rho_u)},   {"rho_R", num(al.rho_r)},
                        {"rho_U2", num(al.rho_u2)}, {"rho_R2", num(al.rho_r2)},
                        {"R2_joint", num(al.r2_joint)},
                        {"pc1_explained_variance_ratio", num(al.pc1_explained_variance_ratio)},
                        {"collinear_composites", al.collinear_composites},
                        {"n", al.n},
                        {"sample", a.config.options.exclude_reference_from_pca ? "all rows except the reference"
                                                                               : "all rows including the reference"}};
  Json sd;
  sd["model"] = a.robust ? "robust" : "classical";
  sd["od_cut_mode"] = to_string(a.sdod.mode);
  sd["components_used"] = a.sdod.components_used;
  sd["sd_cut"] = num(a.sdod.sd_cut);
  sd["od_cut"] = num(a.sdod.od_cut);
  sd["od_degenerate"] = a.sdod.od_degenerate;
  sd["rows"] = Json::array();
  for (std::size_t s = 0; s < a.pca_rows.size(); ++s)
    sd["rows"].push_back(Json{{"id", a.labels[a.pca_rows[s]]}, {"sd", num(a.sdod.sd[s])},
                              {"od", num(a.sdod.od[s])}, {"flag", to_string(a.sdod.flags[s])}});
  sd["warnings"] = a.sdod.warnings;
  if (a.robust) {
    sd["robust_model"] = pca_model_json(a.robust->model);
    sd["robust_subset"] = ids(a, [&] {
      std::vector<std::size_t> rows;
      for (auto s : a.robust->subset) rows.push_back(a.pca_rows[s]);
      return rows;
    }());
    sd["robust_fitted"] = ids(a, [&] {
      std::vector<std::size_t> rows;
      for (auto s : a.robust->fitted) rows.push_back(a.pca_rows[s]);
      return rows;
    }());
    sd["directions_used"] = a.robust->directions_used;
    sd["seed"] = a.config.options.seed;
  }
  j["sd_od"] = sd;
  j["blockwise"] = Json{{"utility", block_axis_json(a, a.blockwise.utility)},
                        {"risk", block_axis_json(a, a.blockwise.risk)}};
  if (a.acceptance) {
    Json v = Json::array();
    for (const auto& p : a.acceptance->vertices) v.push_back(Json::array({num(p.x), num(p.y)}));
    Json t = Json::object();
    for (std::size_t c = 0; c < a.nm.num_measures(); ++c) t[a.nm.specs[c].id] = num(a.acceptance->thresholds[c]);
    j["acceptance"] = Json{{"vertices", v}, {"thresholds", t}, {"enumerated", a.acceptance->enumerated}};
  } else {
    j["acceptance"] = nullptr;
  }
  j["groups"] = Json::array();
  for (const auto& g : a.groups) {
    Json gj{{"dataset", g.group}, {"size", g.members.size()},
            {"centroid", Json::array({num(g.centroid.x), num(g.centroid.y)})}};
    if (g.ellipse)
      gj["ellipse"] = Json{{"semi_major", num(g.ellipse->semi_major)}, {"semi_minor", num(g.ellipse->semi_minor)},
                           {"angle", num(g.ellipse->angle)}, {"level", kEllipseLevel}};
    else
      gj["ellipse"] = nullptr;
    Json hull = Json::array();
    for (const auto& p : g.hull) hull.push_back(Json::array({num(p.x), num(p.y)}));
    gj["hull"] = hull;
    j["groups"].push_back(gj);
  }
  return j;
}

inline Json profiles_json(const Analysis& a) {
  using namespace detail;
  Json j;
  j["r_aux"] = a.config.options.r_aux;
  j["axes"] = Json::array();
  for (const auto& s : a.nm.specs) j["axes"].push_back(s.id);
  j["auxiliary_vertices_in_area"] = true;
  j["profiles"] = Json::array();
  for (const auto& p : a.profiles) {
    Json v = Json::array();
    for (const auto& q : p.vertices) v.push_back(Json::array({num(q.x), num(q.y)}));
    j["profiles"].push_back(Json{{"id", p.id}, {"vertices", v}, {"area_raw", num(p.area_raw)},
                                 {"area_normalized", num(p.area_normalized)}});
  }
  j["ranking"] = Json::array();
  for (const auto& r : a.areas)
    j["ranking"].push_back(Json{{"id", r.id}, {"area", num(r.area)}, {"display", fmt_fixed(r.area)}});
  j["caveat"] = kAreaCaveat;
  j["origami_selection"] = a.origami_selection;
  Json lines = Json::array();
  for (const auto& l : a.pcp.lines)
    lines.push_back(Json{{"id", l.id}, {"values", l.values}, {"pareto", l.pareto}, {"reference", l.reference}});
  Json axes = Json::array();
  for (auto c : a.pcp.axes) axes.push_back(a.nm.specs[c].id);
  j["pcp"] = Json{{"axes", axes}, {"pareto", "composite"}, {"lines", lines}};
  return j;
}

// Human-readable area ranking, one approach per line.
inline std::string area_table(const Analysis& a) {
  std::string out = "approach            area\n";
  for (const auto& r : a.areas) {
    std::string id = truncate_label(r.id);
    out += id + std::string(id.size() < 20 ? 20 - id.size() : 1, ' ') + fmt_fixed(r.area) + "\n";
  }
  return out;
}

}  // namespace rumap

#endif  // RUMAP_ARTIFACTS_HPP_
