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

// End-to-end analysis of one study: every result the artifacts and plots need.

#ifndef RUMAP_PIPELINE_HPP_
#define RUMAP_PIPELINE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rumap/composites.hpp"
#include "rumap/config.hpp"
#include "rumap/diagnostics.hpp"
#include "rumap/error.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/ordering.hpp"
#include "rumap/pareto.hpp"
#include "rumap/pca.hpp"
#include "rumap/profiles.hpp"
#include "rumap/projection.hpp"
#include "rumap/render.hpp"
#include "rumap/svg.hpp"

namespace rumap {

struct RayRecord {
  std::size_t row = 0;
  std::size_t reference_row = 0;
  Ray ray;
};

struct Analysis {
  StudyConfig config;
  NormalizedMatrix nm;
  std::vector<std::string> labels;  // row labels, "id [dataset]" when a dataset is set
  std::vector<double> weights;      // per normalized column, empty when all 1

  ParetoSet pareto;
  CompositeScores composites;
  std::vector<CompositePoint> points;      // every row
  std::vector<std::size_t> candidate_rows; // rows eligible for the composite front
  std::vector<std::size_t> front_rows;     // composite front, U ascending
  std::vector<FrontEdge> edges;
  std::optional<Knee> knee;
  std::optional<std::size_t> knee_row;
  std::optional<std::size_t> reference_row;  // global reference
  std::vector<RayRecord> rays;
  ReliabilityReport reliability;

  Dendrogram dendrogram;

  std::vector<std::size_t> pca_rows;
  PcaModel pca;
  AlignmentReport alignment;
  std::optional<RobustPca> robust;
  SdOdDiagnostics sdod;
  BlockwiseResult blockwise;
  std::optional<AcceptancePolygon> acceptance;
  std::vector<GroupSummary> groups;

  std::vector<RadialProfile> profiles;
  std::vector<AreaRank> areas;
  std::vector<std::string> origami_selection;
  PcpLines pcp;

  std::vector<std::string> warnings;
};

namespace detail {

inline Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<std::size_t>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  return out;
}

inline std::optional<std::size_t> find_row(const NormalizedMatrix& nm, const std::string& label) {
  for (std::size_t i = 0; i < nm.num_rows(); ++i)
    if (nm.rows[i].label() == label || (nm.rows[i].id == label && !nm.rows[i].dataset)) return i;
  return std::nullopt;
}

}  // namespace detail

inline Analysis analyze(const MeasureMatrix& raw, const StudyConfig& cfg) {
  validate_options(cfg);
  const auto& opt = cfg.options;
  Analysis a;
  a.config = cfg;
  a.nm = harmonize_and_normalize(raw, NormalizeOptions{opt.exclude_reference_from_range});
  const auto& nm = a.nm;
  const std::size_t n = nm.num_rows();
  for (const auto& w : nm.warnings) a.warnings.push_back(w);
  for (const auto& r : nm.rows) a.labels.push_back(r.label());

  if (!opt.weights.empty()) {
    a.weights.assign(nm.num_measures(), 1.0);
    for (std::size_t j = 0; j < nm.num_measures(); ++j) {
      const auto it = opt.weights.find(nm.specs[j].id);
      if (it != opt.weights.end()) a.weights[j] = it->second;
    }
  }

  // Pareto analysis.
  a.pareto = pareto_set(nm, true);
  a.composites = composite_scores(nm, a.weights);
  for (std::size_t i = 0; i < n; ++i)
    a.points.push_back({a.labels[i], a.composites.rows[i].u, a.composites.rows[i].r});
  std::vector<CompositePoint> cand;
  for (std::size_t i = 0; i < n; ++i)
    if (!nm.rows[i].is_reference) {
      a.candidate_rows.push_back(i);
      cand.push_back(a.points[i]);
    }
  const CompositeFront front = composite_front(cand);
  std::vector<CompositePoint> front_points;
  for (auto k : front.front) {
    a.front_rows.push_back(a.candidate_rows[k]);
    front_points.push_back(cand[k]);
  }
  a.edges = front.edges;
  a.knee = knee_point(front_points);
  if (a.knee) a.knee_row = a.front_rows[a.knee->index];

  const auto refs = nm.reference_rows();
  for (auto r : refs)
    if (!nm.rows[r].dataset) a.reference_row = r;
  if (!a.reference_row && !refs.empty()) a.reference_row = refs.front();
  if (a.reference_row) {
    std::map<std::string, std::size_t> ref_by_dataset;
    for (auto r : refs)
      if (nm.rows[r].dataset) ref_by_dataset[*nm.rows[r].dataset] = r;
    for (auto i : a.candidate_rows) {
      std::size_t ref = *a.reference_row;
      if (nm.rows[i].dataset) {
        const auto it = ref_by_dataset.find(*nm.rows[i].dataset);
        if (it != ref_by_dataset.end()) ref = it->second;
      }
      const CompositePoint pt = a.points[i];
      a.rays.push_back({i, ref, rays_to_reference(std::span(&pt, 1), a.points[ref]).front()});
    }
  } else {
    a.warnings.push_back("reference approach '" + cfg.reference + "' not found; rays to the original are skipped");
  }
  a.reliability = reliability(nm);

  a.dendrogram = hclust(nm.values, opt.linkage);

  // Joint PCA.
  for (std::size_t i = 0; i < n; ++i)
    if (!(opt.exclude_reference_from_pca && nm.rows[i].is_reference)) a.pca_rows.push_back(i);
  const Eigen::MatrixXd data = detail::select_rows(nm.values, a.pca_rows);
  const std::size_t k = std::min<std::size_t>({2, a.pca_rows.size() - 1, nm.num_measures()});
  if (a.pca_rows.size() < 2) throw AnalysisError("PCA needs at least 2 rows after exclusions");
  std::vector<double> u, r;
  for (auto i : a.pca_rows) {
    u.push_back(a.composites.rows[i].u);
    r.push_back(a.composites.rows[i].r);
  }
  a.pca = orient(pca_fit(data, k), u, r, opt.orient);
  for (const auto& w : a.pca.warnings) a.warnings.push_back("pca: " + w);
  a.alignment = alignment(a.pca, u, r);
  if (opt.robust) {
    RobustPcaOptions ro;
    ro.seed = opt.seed;
    ro.od_cut_mode = opt.od_cut_mode;
    a.robust = robust_pca(data, a.pca.components(), ro);
    a.sdod = sd_od(a.robust->model, data, opt.od_cut_mode);
  } else {
    a.sdod = sd_od(a.pca, data, opt.od_cut_mode);
  }
  for (const auto& w : a.sdod.warnings) a.warnings.push_back("sd_od: " + w);
  a.blockwise = blockwise_pca(nm);
  if (a.blockwise.utility.fallback) a.warnings.push_back("utility block has one measure; blockwise axis is the raw column");
  if (a.blockwise.risk.fallback) a.warnings.push_back("risk block has one measure; blockwise axis is the raw column");

  if (!opt.thresholds.empty()) {
    if (a.pca.components() != 2) {
      a.warnings.push_back("acceptance region needs two components; skipped");
    } else {
      std::vector<double> c;
      for (const auto& s : nm.specs) {
        const auto it = opt.thresholds.find(s.id);
        c.push_back(it != opt.thresholds.end() ? it->second : (s.block == Block::Risk ? 1.0 : 0.0));
      }
      a.acceptance = project_acceptance_region(a.pca, nm.specs, c);
    }
  }

  std::set<std::string> datasets;
  std::vector<Point2> gpts;
  std::vector<std::string> glabels;
  for (std::size_t s = 0; s < a.pca_rows.size(); ++s) {
    const auto& row = nm.rows[a.pca_rows[s]];
    if (!row.dataset) continue;
    datasets.insert(*row.dataset);
    gpts.push_back({a.pca.scores(static_cast<Eigen::Index>(s), 0),
                    a.pca.components() >= 2 ? a.pca.scores(static_cast<Eigen::Index>(s), 1) : 0.0});
    glabels.push_back(*row.dataset);
  }
  if (datasets.size() >= 2) a.groups = group_summaries(gpts, glabels);

  // Profiles.
  a.profiles = build_origami_all(nm, opt.r_aux, a.weights);
  a.areas = ranked_areas(a.profiles);
  if (!opt.origami_selection.empty()) {
    for (const auto& id : opt.origami_selection) {
      const auto row = detail::find_row(nm, id);
      if (!row) throw ValidationError("options.origami_selection: unknown approach id '" + id + "'");
      a.origami_selection.push_back(a.labels[*row]);
    }
  } else if (!a.front_rows.empty()) {
    for (auto i : a.front_rows) a.origami_selection.push_back(a.labels[i]);
  } else {
    a.origami_selection = a.labels;
  }
  a.pcp = build_pcp(nm, a.front_rows);
  return a;
}

// ---------------------------------------------------------------------------
// Plots

inline const std::vector<PlotKind>& all_plot_kinds() {
  static const std::vector<PlotKind> k = {PlotKind::Heatmap, PlotKind::DotPlot, PlotKind::CompositeRU,
                                          PlotKind::Rays,    PlotKind::Pcp,     PlotKind::Origami,
                                          PlotKind::Biplot,  PlotKind::SdOdMap, PlotKind::BlockwiseRU};
  return k;
}

inline PlotKind parse_plot_kind(std::string_view s) {
  for (auto k : all_plot_kinds())
    if (s == to_string(k)) return k;
  std::string names;
  for (auto k : all_plot_kinds()) names += (names.empty() ? "" : ", ") + std::string(to_string(k));
  throw ValidationError("unknown plot kind '" + std::string(s) + "'; expected one of: " + names);
}

inline PlotDocument render_plot(const Analysis& a, PlotKind kind) {
  switch (kind) {
    case PlotKind::Heatmap:
      return render_heatmap(a.nm, a.dendrogram, a.front_rows, a.config.options.linkage);
    case PlotKind::DotPlot:
      return render_dotplot(a.nm);
    case PlotKind::CompositeRU: {
      CompositePanel panel;
      panel.points = a.points;
      panel.scores = a.composites.rows;
      panel.front = a.front_rows;
      panel.edges = a.edges;
      panel.knee = a.knee_row;
      panel.reference = a.reference_row;
      return render_composite_ru(panel, a.reliability);
    }
    case PlotKind::Rays: {
      if (!a.reference_row) throw ValidationError("rays plot needs the reference approach '" + a.config.reference + "'");
      std::vector<CompositePoint> pts;
      std::vector<Ray> rays;
      for (const auto& rr : a.rays) {
        pts.push_back(a.points[rr.row]);
        rays.push_back(rr.ray);
      }
      return render_rays(pts, rays, a.points[*a.reference_row]);
    }
    case PlotKind::Pcp:
      return render_pcp(a.pcp, a.nm.specs);
    case PlotKind::Origami:
      return render_origami(a.profiles, a.nm.specs, a.origami_selection);
    case PlotKind::Biplot: {
      BiplotInput in;
      in.model = &a.pca;
      for (std::size_t s = 0; s < a.pca_rows.size(); ++s) {
        const std::size_t i = a.pca_rows[s];
        in.labels.push_back(a.labels[i]);
        if (detail::is_member(a.front_rows, i)) in.pareto_rows.push_back(s);
        if (a.nm.rows[i].is_reference) in.reference_rows.push_back(s);
      }
      in.specs = a.nm.specs;
      in.acceptance = a.acceptance;
      in.groups = a.groups;
      auto doc = render_biplot(in);
      doc.metadata["orientation"] = a.config.options.orient ? "oriented" : "native";
      return doc;
    }
    case PlotKind::SdOdMap: {
      std::vector<std::string> labels;
      for (auto i : a.pca_rows) labels.push_back(a.labels[i]);
      return render_sdod(a.sdod, labels, a.robust ? "robust" : "classical");
    }
    case PlotKind::BlockwiseRU:
      return render_blockwise(a.blockwise, a.labels, a.nm.specs, a.front_rows);
  }
  throw ValidationError("unsupported plot kind");
}

struct SvgArtifact {
  std::string name;
  std::string content;
};

// The report's figure set: the composite map and the rays view share one
// file, every other family gets its own.
inline std::vector<SvgArtifact> render_report_svgs(const Analysis& a) {
  std::vector<SvgArtifact> out;
  for (auto kind : all_plot_kinds()) {
    if (kind == PlotKind::Rays) continue;
    const std::string name = std::string(to_string(kind)) + ".svg";
    if (kind == PlotKind::CompositeRU && a.reference_row) {
      const std::vector<PlotDocument> docs = {render_plot(a, PlotKind::CompositeRU), render_plot(a, PlotKind::Rays)};
      out.push_back({name, to_svg_panels(docs)});
    } else {
      out.push_back({name, to_svg(render_plot(a, kind))});
    }
  }
  return out;
}

}  // namespace rumap

#endif  // RUMAP_PIPELINE_HPP_
