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

// Builds PlotDocuments for each figure family from analysis results.

#ifndef RUMAP_RENDER_HPP_
#define RUMAP_RENDER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rumap/composites.hpp"
#include "rumap/diagnostics.hpp"
#include "rumap/error.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/ordering.hpp"
#include "rumap/pareto.hpp"
#include "rumap/pca.hpp"
#include "rumap/profiles.hpp"
#include "rumap/projection.hpp"
#include "rumap/stats.hpp"
#include "rumap/svg.hpp"

namespace rumap {

namespace palette {
inline const std::string kPareto = "#1f77b4";
inline const std::string kOther = "#9e9e9e";
inline const std::string kReference = "#000000";
inline const std::string kKnee = "#ff7f0e";
inline const std::string kRisk = "#b2182b";
inline const std::string kUtility = "#2166ac";
inline const std::string kAxis = "#444444";
inline const std::string kGuide = "#cccccc";
inline const std::string kAcceptance = "#1b9e77";

inline const std::vector<std::string> kCategorical = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                      "#9467bd", "#8c564b", "#e377c2", "#17becf",
                                                      "#bcbd22", "#7f7f7f"};
}  // namespace palette

// Linear white-to-red (risk) or white-to-blue (utility) ramp.
inline std::string ramp_color(Block b, double v) {
  v = std::clamp(v, 0.0, 1.0);
  const int tr = b == Block::Risk ? 178 : 33;
  const int tg = b == Block::Risk ? 24 : 102;
  const int tb = b == Block::Risk ? 43 : 172;
  auto mix = [v](int target) { return static_cast<int>(std::lround(255.0 + (target - 255.0) * v)); };
  return rgb(mix(tr), mix(tg), mix(tb));
}

// Distinct shade for the i-th of `count` measures of a block.
inline std::string block_shade(Block b, std::size_t i, std::size_t count) {
  const double t = count <= 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
  return ramp_color(b, 0.45 + 0.55 * t);
}

namespace detail {

struct Scale {
  double d0 = 0, d1 = 1, r0 = 0, r1 = 1;
  double operator()(double v) const {
    if (d1 == d0) return 0.5 * (r0 + r1);
    return r0 + (v - d0) / (d1 - d0) * (r1 - r0);
  }
  double invert(double px) const {
    if (r1 == r0) return d0;
    return d0 + (px - r0) / (r1 - r0) * (d1 - d0);
  }
};

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  Extent padded(double frac) const {
    Extent e = *this;
    if (!(e.hi >= e.lo)) e = {0.0, 1.0};
    if (e.hi - e.lo < 1e-12) {
      e.lo -= 0.5;
      e.hi += 0.5;
    }
    const double pad = (e.hi - e.lo) * frac;
    return {e.lo - pad, e.hi + pad};
  }
};

struct Frame {
  double left = 80, top = 60, right = 750, bottom = 580;
};

inline Style stroke(const std::string& color, double width = 1.0, std::string dash = {}) {
  Style s;
  s.stroke = color;
  s.stroke_width = width;
  s.dash = std::move(dash);
  return s;
}

inline Style filled(const std::string& color, double opacity = 1.0) {
  Style s;
  s.fill = color;
  s.opacity = opacity;
  return s;
}

inline Style filled_stroked(const std::string& fill, const std::string& line, double width = 1.0) {
  Style s;
  s.fill = fill;
  s.stroke = line;
  s.stroke_width = width;
  return s;
}

inline Primitive& label(PlotDocument& doc, double x, double y, const std::string& text,
                        double size = 12, std::string anchor = "start", int z = 50,
                        std::string role = "label") {
  TextItem t{x, y, truncate_label(text), size, std::move(anchor), 0, false};
  auto& p = doc.add(t, Style{}, z, std::move(role), text);
  if (t.text != text) p.title = text;
  return p;
}

inline void title(PlotDocument& doc, const std::string& text) {
  doc.title = text;
  TextItem t{20, 28, text, 16, "start", 0, true};
  doc.add(t, Style{}, 100, "title");
}

inline std::vector<double> nice_ticks(double lo, double hi, int target = 5) {
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= target) break;
  }
  std::vector<double> out;
  for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step)
    out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  return out;
}

inline int tick_digits(const std::vector<double>& ticks) {
  if (ticks.size() < 2) return 2;
  const double step = ticks[1] - ticks[0];
  return std::clamp(static_cast<int>(std::ceil(-std::log10(step) + 1e-9)) + 1, 0, 4);
}

inline void axes(PlotDocument& doc, const Frame& f, const Scale& xs, const Scale& ys,
                 const std::string& xlabel, const std::string& ylabel) {
  doc.add(LineShape{f.left, f.bottom, f.right, f.bottom}, stroke(palette::kAxis), 5, "axis");
  doc.add(LineShape{f.left, f.bottom, f.left, f.top}, stroke(palette::kAxis), 5, "axis");
  const auto xt = nice_ticks(xs.d0, xs.d1);
  const auto yt = nice_ticks(ys.d0, ys.d1);
  for (double t : xt) {
    const double x = xs(t);
    doc.add(LineShape{x, f.bottom, x, f.bottom + 5}, stroke(palette::kAxis), 5, "tick");
    doc.add(TextItem{x, f.bottom + 18, fmt_fixed(t, tick_digits(xt)), 10, "middle"}, Style{}, 5,
            "tick-label");
  }
  for (double t : yt) {
    const double y = ys(t);
    doc.add(LineShape{f.left - 5, y, f.left, y}, stroke(palette::kAxis), 5, "tick");
    doc.add(TextItem{f.left - 8, y + 4, fmt_fixed(t, tick_digits(yt)), 10, "end"}, Style{}, 5,
            "tick-label");
  }
  doc.add(TextItem{0.5 * (f.left + f.right), f.bottom + 40, xlabel, 12, "middle"}, Style{}, 5,
          "axis-label");
  doc.add(TextItem{f.left - 48, 0.5 * (f.top + f.bottom), ylabel, 12, "middle", -90}, Style{}, 5,
          "axis-label");
}

// Vertical position below the legend column, for free-form annotations.
inline double below_legend(const PlotDocument& doc) {
  return 24.0 + 16.0 * static_cast<double>(doc.legend.size()) + 20.0;
}

inline bool is_member(std::span<const std::size_t> set, std::size_t i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Heatmap

// Rows follow the dendrogram leaf order; columns are the risk block then the
// utility block. Composite Pareto-optimal rows carry an asterisk.
inline PlotDocument render_heatmap(const NormalizedMatrix& nm, const Dendrogram& dendro,
                                   std::span<const std::size_t> pareto_rows,
                                   Linkage linkage = Linkage::Complete) {
  using namespace detail;
  PlotDocument doc;
  doc.kind = PlotKind::Heatmap;
  title(doc, "Normalized risk and utility measures");
  const std::size_t n = nm.num_rows();
  if (dendro.order.size() != n) throw ValidationError("dendrogram does not match the matrix rows");
  std::vector<std::size_t> cols;
  for (Block b : {Block::Risk, Block::Utility})
    for (auto c : nm.block_columns(b)) cols.push_back(c);

  const double top = 110, bottom = 600, gx0 = 300, gx1 = 750;
  const double row_h = std::min(36.0, (bottom - top) / static_cast<double>(n));
  const double col_w = (gx1 - gx0) / static_cast<double>(cols.size());
  std::vector<double> row_y(n);  // centre of each data row's band
  for (std::size_t pos = 0; pos < n; ++pos) row_y[dendro.order[pos]] = top + (pos + 0.5) * row_h;

  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& spec = nm.specs[cols[c]];
    const double x = gx0 + (c + 0.5) * col_w;
    auto& p = doc.add(TextItem{x, top - 8, truncate_label(spec.display_name), 10, "start", -45},
                      filled(spec.block == Block::Risk ? palette::kRisk : palette::kUtility), 20,
                      "column-label", spec.id);
    if (truncate_label(spec.display_name) != spec.display_name) p.title = spec.display_name;
  }

  std::vector<std::string> order_ids;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t i = dendro.order[pos];
    const double y0 = top + pos * row_h;
    order_ids.push_back(nm.rows[i].label());
    std::string text = truncate_label(nm.rows[i].label());
    if (is_member(pareto_rows, i)) text += " *";
    auto& lab = doc.add(TextItem{gx0 - 10, y0 + 0.5 * row_h + 4, text, 12, "end"}, Style{}, 20,
                        "row-label", nm.rows[i].label());
    if (text.rfind(nm.rows[i].label(), 0) != 0) lab.title = nm.rows[i].label();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const double v = nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(cols[c]));
      const Block b = nm.specs[cols[c]].block;
      auto& cell = doc.add(RectShape{gx0 + c * col_w, y0, col_w, row_h},
                           filled_stroked(ramp_color(b, v), "#ffffff", 0.5), 10, "cell",
                           nm.rows[i].label() + "|" + nm.specs[cols[c]].id);
      cell.data = {v};
      doc.add(TextItem{gx0 + (c + 0.5) * col_w, y0 + 0.5 * row_h + 4, fmt_fixed(v), 10, "middle"},
              filled(v > 0.6 ? "#ffffff" : "#222222"), 15, "cell-text");
    }
  }

  // Dendrogram: leaves at x = 150, root toward x = 20.
  double max_h = 0.0;
  for (const auto& m : dendro.merges) max_h = std::max(max_h, m.height);
  const Scale hx{0.0, max_h > 0.0 ? max_h : 1.0, 150.0, 20.0};
  std::vector<double> node_y(n + dendro.merges.size()), node_h(n + dendro.merges.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) node_y[i] = row_y[i];
  for (std::size_t s = 0; s < dendro.merges.size(); ++s) {
    const auto& m = dendro.merges[s];
    const std::size_t id = n + s;
    node_y[id] = 0.5 * (node_y[m.left] + node_y[m.right]);
    node_h[id] = m.height;
    const double x = hx(m.height);
    doc.add(PathShape{{{hx(node_h[m.left]), node_y[m.left]},
                       {x, node_y[m.left]},
                       {x, node_y[m.right]},
                       {hx(node_h[m.right]), node_y[m.right]}},
                      false},
            stroke(palette::kAxis), 5, "dendrogram");
  }

  std::string joined;
  for (std::size_t i = 0; i < order_ids.size(); ++i) joined += (i ? "," : "") + order_ids[i];
  doc.metadata["leaf_order"] = joined;
  doc.metadata["linkage"] = to_string(linkage);
  doc.metadata["pareto"] = "composite";
  doc.legend.push_back({"risk (white to red)", filled(palette::kRisk), MarkerShape::Square});
  doc.legend.push_back({"utility (white to blue)", filled(palette::kUtility), MarkerShape::Square});
  doc.legend.push_back({"* composite Pareto-optimal", filled("#ffffff"), MarkerShape::Square});
  return doc;
}

// ---------------------------------------------------------------------------
// Dot plot

// Two facets on a shared [0, 1] axis; one dot per measure and a diamond at
// each approach's per-facet median.
inline PlotDocument render_dotplot(const NormalizedMatrix& nm) {
  using namespace detail;
  PlotDocument doc;
  doc.kind = PlotKind::DotPlot;
  title(doc, "Risk (left) and utility (right) measures per approach");
  const std::size_t n = nm.num_rows();
  const double top = 80, bottom = 590;
  const double row_h = (bottom - top) / static_cast<double>(n);
  struct Facet {
    Block block;
    Scale x;
    const char* name;
  };
  const Facet facets[] = {{Block::Risk, Scale{0, 1, 210, 470}, "risk"},
                          {Block::Utility, Scale{0, 1, 490, 750}, "utility"}};
  for (const auto& f : facets) {
    doc.add(TextItem{0.5 * (f.x.r0 + f.x.r1), top - 20, f.name, 12, "middle", 0, true},
            filled(f.block == Block::Risk ? palette::kRisk : palette::kUtility), 20, "facet-title");
    doc.add(LineShape{f.x.r0, bottom, f.x.r1, bottom}, stroke(palette::kAxis), 5, "axis");
    for (double t : {0.0, 0.5, 1.0}) {
      doc.add(LineShape{f.x(t), bottom, f.x(t), bottom + 5}, stroke(palette::kAxis), 5, "tick");
      doc.add(TextItem{f.x(t), bottom + 18, fmt_fixed(t, 1), 10, "middle"}, Style{}, 5, "tick-label");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double y = top + (i + 0.5) * row_h;
    label(doc, 200, y + 4, nm.rows[i].label(), 11, "end", 20, "row-label");
    for (const auto& f : facets) {
      const auto cols = nm.block_columns(f.block);
      std::vector<double> vals;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const double v = nm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(cols[c]));
        vals.push_back(v);
        auto& dot = doc.add(MarkerItem{f.x(v), y, MarkerShape::Circle, 4},
                            filled(block_shade(f.block, c, cols.size()), 0.9), 30,
                            std::string("dot ") + f.name, nm.rows[i].label() + "|" + nm.specs[cols[c]].id);
        dot.data = {v};
      }
      const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
      doc.add(LineShape{f.x(*lo), y, f.x(*hi), y}, stroke(palette::kOther, 1.5), 25, "range");
      const double med = stats::median(vals);
      auto& mk = doc.add(MarkerItem{f.x(med), y, MarkerShape::Diamond, 5},
                         filled_stroked(palette::kOther, "#555555"), 35,
                         std::string("median ") + f.name, nm.rows[i].label());
      mk.data = {med};
    }
  }
  for (Block b : {Block::Risk, Block::Utility}) {
    const auto cols = nm.block_columns(b);
    for (std::size_t c = 0; c < cols.size(); ++c)
      doc.legend.push_back({nm.specs[cols[c]].display_name, filled(block_shade(b, c, cols.size())),
                            MarkerShape::Circle});
  }
  doc.legend.push_back({"median", filled(palette::kOther), MarkerShape::Diamond});
  return doc;
}

// ---------------------------------------------------------------------------
// Composite R-U map and rays to the original

struct CompositePanel {
  std::vector<CompositePoint> points;  // every row, labels as ids
  std::vector<CompositeScore> scores;  // same order, for error bars
  std::vector<std::size_t> front;      // rows on the composite front, U ascending
  std::vector<FrontEdge> edges;        // consecutive front pairs
  std::optional<std::size_t> knee;     // row index
  std::optional<std::size_t> reference;
};

namespace detail {

inline void ru_scales(std::span<const CompositePoint> pts, std::span<const CompositeScore> sc,
                      const Frame& f, Scale& xs, Scale& ys) {
  Extent ex, ey;
  ex.add(0.0), ex.add(1.0), ey.add(0.0), ey.add(1.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double su = i < sc.size() ? sc[i].sd_u : 0.0;
    const double sr = i < sc.size() ? sc[i].sd_r : 0.0;
    ex.add(pts[i].u - su), ex.add(pts[i].u + su);
    ey.add(pts[i].r - sr), ey.add(pts[i].r + sr);
  }
  ex = ex.padded(0.03);
  ey = ey.padded(0.03);
  xs = Scale{ex.lo, ex.hi, f.left, f.right};
  ys = Scale{ey.lo, ey.hi, f.bottom, f.top};
}

inline std::string reliability_line(const char* name, const BlockReliability& b) {
  auto opt = [](const std::optional<double>& v) { return v ? fmt_fixed(*v) : std::string("n/a"); };
  return std::string(name) + ": \xCE\xB1 = " + opt(b.alpha) + ", \xCF\x89 = " + opt(b.omega);
}

}  // namespace detail

inline PlotDocument render_composite_ru(const CompositePanel& panel,
                                        const ReliabilityReport& reliability) {
  using namespace detail;
  PlotDocument doc;
  doc.kind = PlotKind::CompositeRU;
  title(doc, "Composite risk vs. utility");
  const Frame f;
  Scale xs, ys;
  ru_scales(panel.points, panel.scores, f, xs, ys);
  axes(doc, f, xs, ys, "composite utility U", "composite risk R");

  for (std::size_t i = 0; i < panel.points.size(); ++i) {
    const auto& p = panel.points[i];
    const double x = xs(p.u), y = ys(p.r);
    if (i < panel.scores.size()) {
      const auto& s = panel.scores[i];
      if (s.sd_u > 0.0)
        doc.add(LineShape{xs(p.u - s.sd_u), y, xs(p.u + s.sd_u), y}, stroke(palette::kOther), 20,
                "errorbar-u", p.id).data = {s.sd_u};
      if (s.sd_r > 0.0)
        doc.add(LineShape{x, ys(p.r - s.sd_r), x, ys(p.r + s.sd_r)}, stroke(palette::kOther), 20,
                "errorbar-r", p.id).data = {s.sd_r};
    }
    const bool on_front = is_member(panel.front, i);
    const bool is_ref = panel.reference && *panel.reference == i;
    const bool is_knee = panel.knee && *panel.knee == i;
    MarkerItem m{x, y, MarkerShape::Circle, 5};
    Style st = filled(on_front ? palette::kPareto : palette::kOther);
    std::string role = on_front ? "point pareto" : "point";
    if (is_ref) {
      m.shape = MarkerShape::Cross;
      st = stroke(palette::kReference, 2);
      role = "point reference";
    }
    if (is_knee) {
      m.shape = MarkerShape::Star;
      m.size = 6;
      st = filled_stroked(palette::kKnee, palette::kPareto, 1.5);
      role = "point pareto knee";
    }
    doc.add(m, st, 40, role, p.id).data = {p.u, p.r};
    label(doc, x + 8, y - 8, p.id, 10, "start", 45, "point-label");
  }

  if (panel.front.size() >= 2) {
    std::vector<Point2> line;
    for (auto i : panel.front) line.push_back({xs(panel.points[i].u), ys(panel.points[i].r)});
    doc.add(PathShape{line, false}, stroke(palette::kPareto, 2), 30, "front");
  }
  for (const auto& e : panel.edges) {
    const auto& a = panel.points[panel.front[e.from]];
    const auto& b = panel.points[panel.front[e.to]];
    const std::string s = e.slope_defined ? fmt_fixed(e.slope) : std::string("\xE2\x88\x9E");
    auto& t = doc.add(TextItem{0.5 * (xs(a.u) + xs(b.u)) + 6, 0.5 * (ys(a.r) + ys(b.r)) + 14,
                               "\xCE\x94R/\xCE\x94U = " + s, 10, "start"},
                      filled(palette::kPareto), 45, "slope-label");
    t.data = {e.du, e.dr, e.slope};
  }

  doc.legend.push_back({"composite Pareto-optimal", filled(palette::kPareto), MarkerShape::Circle});
  doc.legend.push_back({"dominated", filled(palette::kOther), MarkerShape::Circle});
  if (panel.knee) doc.legend.push_back({"knee point", filled(palette::kKnee), MarkerShape::Star});
  if (panel.reference)
    doc.legend.push_back({"original (reference)", stroke(palette::kReference, 2), MarkerShape::Cross});
  doc.legend.push_back({"error bars: \xC2\xB1 1 sd", stroke(palette::kOther), MarkerShape::Square});
  double y0 = below_legend(doc);
  for (const auto& [name, rel] : {std::pair{"risk", &reliability.risk}, std::pair{"utility", &reliability.utility}}) {
    doc.add(TextItem{770, y0, reliability_line(name, *rel), 10}, Style{}, 60, "reliability", name);
    doc.add(TextItem{782, y0 + 14, to_string(rel->verdict), 10}, Style{}, 60, "reliability-verdict", name);
    y0 += 34;
  }
  return doc;
}

// One ray per approach to the reference point, labelled with its slope and
// Euclidean length. `rays` and `points` are parallel.
inline PlotDocument render_rays(std::span<const CompositePoint> points, std::span<const Ray> rays,
                                const CompositePoint& reference) {
  using namespace detail;
  if (points.size() != rays.size()) throw ValidationError("rays do not match the points");
  PlotDocument doc;
  doc.kind = PlotKind::Rays;
  title(doc, "Rays to the original: \xCE\x94R/\xCE\x94U and L2");
  const Frame f;
  std::vector<CompositePoint> all(points.begin(), points.end());
  all.push_back(reference);
  Scale xs, ys;
  ru_scales(all, {}, f, xs, ys);
  axes(doc, f, xs, ys, "composite utility U", "composite risk R");
  const double rx = xs(reference.u), ry = ys(reference.r);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const auto& r = rays[i];
    const double x = xs(p.u), y = ys(p.r);
    doc.add(LineShape{x, y, rx, ry}, stroke(palette::kPareto, 1.2), 20, "ray", p.id).data = {r.slope, r.l2};
    doc.add(MarkerItem{x, y, MarkerShape::Circle, 4}, filled(palette::kPareto), 40, "point", p.id);
    label(doc, x + 6, y - 6, p.id, 10, "start", 45, "point-label");
  }
  doc.add(MarkerItem{rx, ry, MarkerShape::Cross, 6}, stroke(palette::kReference, 2), 50,
          "point reference", reference.id);
  label(doc, rx + 8, ry + 14, reference.id, 11, "start", 50, "point-label");
  doc.legend.push_back({"approach", filled(palette::kPareto), MarkerShape::Circle});
  doc.legend.push_back({"original (U0, R0)", stroke(palette::kReference, 2), MarkerShape::Cross});

  // Slope and length table in the legend column.
  double y = below_legend(doc);
  doc.add(TextItem{770, y, "approach: \xCE\x94R/\xCE\x94U, L2", 10, "start", 0, true}, Style{}, 60, "ray-table-head");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& r = rays[i];
    y += 14;
    const std::string s = r.slope_defined ? fmt_fixed(r.slope) : std::string("\xE2\x88\x9E");
    auto& t = doc.add(TextItem{770, y, truncate_label(points[i].id, 12) + ": s = " + s + ", L2 = " + fmt_fixed(r.l2), 9},
                      filled("#333333"), 60, "ray-label", points[i].id);
    if (truncate_label(points[i].id, 12) != points[i].id) t.title = points[i].id;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Parallel coordinates

inline PlotDocument render_pcp(const PcpLines& pcp, std::span<const MeasureSpec> specs) {
  using namespace detail;
  PlotDocument doc;
  doc.kind = PlotKind::Pcp;
  title(doc, "Parallel coordinates: risk (left) and utility (right)");
  const double top = 80, bottom = 540;
  const Scale ys{0, 1, bottom, top};
  struct Facet {
    Block block;
    double x0, x1;
    const char* name;
    std::vector<std::size_t> slots;  // positions in pcp.axes
  };
  std::vector<Facet> facets = {{Block::Risk, 80, 390, "risk", {}}, {Block::Utility, 440, 750, "utility", {}}};
  for (std::size_t a = 0; a < pcp.axes.size(); ++a)
    for (auto& f : facets)
      if (specs[pcp.axes[a]].block == f.block) f.slots.push_back(a);

  std::map<std::string, std::string> colors;
  std::size_t next_color = 0;
  for (const auto& line : pcp.lines)
    if (line.pareto && !line.reference)
      colors[line.id] = palette::kCategorical[next_color++ % palette::kCategorical.size()];

  for (const auto& f : facets) {
    const std::size_t m = f.slots.size();
    auto ax = [&](std::size_t s) {
      return m == 1 ? 0.5 * (f.x0 + f.x1) : f.x0 + (f.x1 - f.x0) * static_cast<double>(s) / (m - 1);
    };
    doc.add(TextItem{0.5 * (f.x0 + f.x1), top - 30, f.name, 12, "middle", 0, true},
            filled(f.block == Block::Risk ? palette::kRisk : palette::kUtility), 20, "facet-title");
    for (double g : {0.25, 0.5, 0.75})
      doc.add(LineShape{f.x0, ys(g), f.x1, ys(g)}, stroke(palette::kGuide, 0.8, "2,3"), 1, "guide");
    for (std::size_t s = 0; s < m; ++s) {
      const auto& spec = specs[pcp.axes[f.slots[s]]];
      doc.add(LineShape{ax(s), top, ax(s), bottom}, stroke(palette::kAxis), 5, "pcp-axis", spec.id);
      auto& t = doc.add(TextItem{ax(s), bottom + 16, truncate_label(spec.display_name, 14), 10, "start", 35},
                        filled(f.block == Block::Risk ? palette::kRisk : palette::kUtility), 20,
                        "axis-label", spec.id);
      if (t.key != spec.display_name) t.title = spec.display_name;
    }
    doc.add(TextItem{f.x0 - 6, ys(0) + 4, "0", 10, "end"}, Style{}, 5, "tick-label");
    doc.add(TextItem{f.x0 - 6, ys(1) + 4, "1", 10, "end"}, Style{}, 5, "tick-label");
    for (const auto& line : pcp.lines) {
      std::vector<Point2> pts;
      std::vector<double> vals;
      for (std::size_t s = 0; s < m; ++s) {
        const double v = line.values[f.slots[s]];
        pts.push_back({ax(s), ys(v)});
        vals.push_back(v);
      }
      Style st = stroke(palette::kOther, 1.2);
      int z = 10;
      std::string role = "line";
      if (line.reference) {
        st = stroke(palette::kReference, 2, "6,3");
        z = 30;
        role = "line reference";
      } else if (line.pareto) {
        st = stroke(colors[line.id], 2.2);
        z = 20;
        role = "line pareto";
      }
      if (m == 1) {  // a single axis still gets a visible mark
        doc.add(MarkerItem{pts[0].x, pts[0].y, MarkerShape::Circle, 3}, filled(st.stroke), z,
                role + " " + f.name, line.id).data = vals;
      } else {
        doc.add(PathShape{pts, false}, st, z, role + " " + f.name, line.id).data = vals;
      }
    }
  }
  for (const auto& [id, c] : colors) doc.legend.push_back({id, stroke(c, 2.2), MarkerShape::Square});
  doc.legend.push_back({"not Pareto-optimal", stroke(palette::kOther, 1.2), MarkerShape::Square});
  for (const auto& line : pcp.lines)
    if (line.reference)
      doc.legend.push_back({line.id + " (benchmark)", stroke(palette::kReference, 2), MarkerShape::Square});
  doc.metadata["pareto"] = "composite";
  return doc;
}

// ---------------------------------------------------------------------------
// Origami

// Small multiples of the selected profiles. Axis labels are coloured by block.
inline PlotDocument render_origami(std::span<const RadialProfile> profiles,
                                   std::span<const MeasureSpec> specs,
                                   std::span<const std::string> selection) {
  using namespace detail;
  PlotDocument doc;
  doc.kind = PlotKind::Origami;
  title(doc, "Origami profiles (risk: lower is better, utility: higher is better)");
  std::vector<const RadialProfile*> chosen;
  for (const auto& id : selection) {
    const RadialProfile* hit = nullptr;
    for (const auto& p : profiles)
      if (p.id == id) hit = &p;
    if (!hit) throw ValidationError("origami selection references unknown approach '" + id + "'");
    chosen.push_back(hit);
  }
  if (chosen.empty()) throw ValidationError("origami selection is empty");
  const std::size_t count = chosen.size();
  const std::size_t ncols = std::min<std::size_t>(3, count);
  const std::size_t nrows = (count + ncols - 1) / ncols;
  const double x0 = 20, x1 = 750, y0 = 50, y1 = 630;
  const double cell = std::min((x1 - x0) / ncols, (y1 - y0) / nrows);
  const double radius = 0.33 * cell;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& prof = *chosen[k];
    const double cx = x0 + (k % ncols + 0.5) * cell;
    const double cy = y0 + (k / ncols + 0.5) * cell + 8;
    auto px = [&](double r, double a) { return Point2{cx + radius * r * std::cos(a), cy - radius * r * std::sin(a)}; };
    doc.add(EllipseShape{cx, cy, radius, radius, 0}, stroke(palette::kGuide, 0.8, "2,3"), 1, "guide");
    for (std::size_t j = 0; j < prof.angles.size(); ++j) {
      if (j % 2 == 1) continue;
      const std::size_t mi = j / 2;
      const Block b = mi < specs.size() ? specs[mi].block : Block::Utility;
      const auto tip = px(1.0, prof.angles[j]);
      doc.add(LineShape{cx, cy, tip.x, tip.y}, stroke(palette::kGuide), 2, "origami-axis");
      const auto lp = px(1.18, prof.angles[j]);
      const std::string name = mi < specs.size() ? specs[mi].id : std::to_string(mi);
      doc.add(TextItem{lp.x, lp.y + 4, truncate_label(name, 12), 9, "middle"},
              filled(b == Block::Risk ? palette::kRisk : palette::kUtility), 20, "axis-label", name);
    }
    std::vector<Point2> poly;
    for (std::size_t j = 0; j < prof.angles.size(); ++j) poly.push_back(px(prof.radii[j], prof.angles[j]));
    auto& shape = doc.add(PathShape{poly, true}, filled_stroked(palette::kPareto, palette::kPareto, 1.5),
                          10, "profile", prof.id);
    shape.style.opacity = 0.45;
    shape.data = {prof.area_normalized};
    for (std::size_t j = 1; j < poly.size(); j += 2)
      doc.add(MarkerItem{poly[j].x, poly[j].y, MarkerShape::Circle, 1.5}, filled(palette::kOther), 15, "aux-point");
    auto& pt = label(doc, cx, cy - radius - 24, prof.id, 11, "middle", 30, "panel-title");
    std::get<TextItem>(pt.shape).text += "  (area " + fmt_fixed(prof.area_normalized) + ")";
  }
  doc.legend.push_back({"risk axis", filled(palette::kRisk), MarkerShape::Square});
  doc.legend.push_back({"utility axis", filled(palette::kUtility), MarkerShape::Square});
  doc.legend.push_back({"auxiliary axis point", filled(palette::kOther), MarkerShape::Circle});
  return doc;
}

// ---------------------------------------------------------------------------
// Biplot

struct BiplotInput {
  const PcaModel* model = nullptr;
  std::vector<std::string> labels;        // one per score row
  std::vector<MeasureSpec> specs;         // one per loading row
  std::vector<std::size_t> pareto_rows;   // composite Pareto rows
  std::vector<std::size_t> reference_rows;
  std::optional<AcceptancePolygon> acceptance;
  std::vector<GroupSummary> groups;
};

inline PlotDocument render_biplot(const BiplotInput& in) {
  using namespace detail;
  if (!in.model) throw ValidationError("biplot needs a PCA model");
  const PcaModel& m = *in.model;
  const auto n = static_cast<std::size_t>(m.scores.rows());
  if (in.labels.size() != n) throw ValidationError("biplot labels do not match the scores");
  const bool two = m.components() >= 2;
  auto score = [&](std::size_t i) {
    return Point2{m.scores(static_cast<Eigen::Index>(i), 0), two ? m.scores(static_cast<Eigen::Index>(i), 1) : 0.0};
  };
  auto loading = [&](std::size_t j) {
    return Point2{m.loadings(static_cast<Eigen::Index>(j), 0), two ? m.loadings(static_cast<Eigen::Index>(j), 1) : 0.0};
  };
  double max_score = 0.0, max_load = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_score = std::max(max_score, std::hypot(score(i).x, score(i).y));
  for (std::size_t j = 0; j < in.specs.size(); ++j) max_load = std::max(max_load, std::hypot(loading(j).x, loading(j).y));
  const double arrow_scale = max_load > 0.0 && max_score > 0.0 ? 0.9 * max_score / max_load : 1.0;

  Extent ex, ey;
  ex.add(0.0), ey.add(0.0);
  for (std::size_t i = 0; i < n; ++i) ex.add(score(i).x), ey.add(score(i).y);
  for (std::size_t j = 0; j < in.specs.size(); ++j)
    ex.add(arrow_scale * loading(j).x), ey.add(arrow_scale * loading(j).y);
  if (in.acceptance)
    for (const auto& v : in.acceptance->vertices) ex.add(v.x), ey.add(v.y);
  for (const auto& g : in.groups) {
    if (g.ellipse) {
      ex.add(g.ellipse->center.x - g.ellipse->semi_major), ex.add(g.ellipse->center.x + g.ellipse->semi_major);
      ey.add(g.ellipse->center.y - g.ellipse->semi_major), ey.add(g.ellipse->center.y + g.ellipse->semi_major);
    }
    for (const auto& v : g.hull) ex.add(v.x), ey.add(v.y);
  }
  ex = ex.padded(0.08);
  ey = ey.padded(0.08);
  // Equal aspect so that ellipses and angles are undistorted.
  Frame f;
  const double upp = std::max((ex.hi - ex.lo) / (f.right - f.left), (ey.hi - ey.lo) / (f.bottom - f.top));
  const double cxm = 0.5 * (ex.lo + ex.hi), cym = 0.5 * (ey.lo + ey.hi);
  const double hw = 0.5 * (f.right - f.left) * upp, hh = 0.5 * (f.bottom - f.top) * upp;
  const Scale xs{cxm - hw, cxm + hw, f.left, f.right};
  const Scale ys{cym - hh, cym + hh, f.bottom, f.top};

  PlotDocument doc;
  doc.kind = PlotKind::Biplot;
  title(doc, "Joint PCA biplot");
  auto pct = [&](Eigen::Index c) {
    return c < m.explained_variance_ratio.size() ? fmt_fixed(100.0 * m.explained_variance_ratio(c), 1) + "%" : std::string("0.0%");
  };
  axes(doc, f, xs, ys, "PC1 (" + pct(0) + ")", "PC2 (" + pct(1) + ")");

  if (in.acceptance && in.acceptance->vertices.size() >= 2) {
    std::vector<Point2> poly;
    for (const auto& v : in.acceptance->vertices) poly.push_back({xs(v.x), ys(v.y)});
    auto& p = doc.add(PathShape{poly, true}, stroke(palette::kAcceptance, 1.5, "5,3"), 8, "acceptance");
    p.style.fill = palette::kAcceptance;
    p.style.opacity = 0.25;
    doc.legend.push_back({"acceptance region", filled(palette::kAcceptance, 0.4), MarkerShape::Square});
  }
  for (std::size_t g = 0; g < in.groups.size(); ++g) {
    const auto& grp = in.groups[g];
    const std::string color = palette::kCategorical[(g + 2) % palette::kCategorical.size()];
    if (grp.ellipse) {
      const auto& e = *grp.ellipse;
      doc.add(EllipseShape{xs(e.center.x), ys(e.center.y), e.semi_major / upp, e.semi_minor / upp,
                           -e.angle * 180.0 / std::numbers::pi},
              stroke(color, 1.2, "4,2"), 9, "group-ellipse", grp.group);
    } else if (grp.hull.size() >= 2) {
      std::vector<Point2> poly;
      for (const auto& v : grp.hull) poly.push_back({xs(v.x), ys(v.y)});
      doc.add(PathShape{poly, grp.hull.size() >= 3}, stroke(color, 1.2, "4,2"), 9, "group-hull", grp.group);
    }
    doc.add(MarkerItem{xs(grp.centroid.x), ys(grp.centroid.y), MarkerShape::Square, 4}, filled(color), 45,
            "group-centroid", grp.group);
    label(doc, xs(grp.centroid.x) + 6, ys(grp.centroid.y) + 14, grp.group, 10, "start", 45, "group-label");
    doc.legend.push_back({"dataset " + grp.group, stroke(color, 1.2), MarkerShape::Square});
  }

  const Point2 origin{xs(0.0), ys(0.0)};
  for (std::size_t j = 0; j < in.specs.size(); ++j) {
    const auto& spec = in.specs[j];
    const std::string color = spec.block == Block::Risk ? palette::kRisk : palette::kUtility;
    const Point2 l = loading(j);
    const Point2 tip{xs(arrow_scale * l.x), ys(arrow_scale * l.y)};
    doc.add(LineShape{origin.x, origin.y, tip.x, tip.y}, stroke(color, 1.5), 20, "loading", spec.id).data = {l.x, l.y};
    const double ang = std::atan2(tip.y - origin.y, tip.x - origin.x);
    if (std::hypot(tip.x - origin.x, tip.y - origin.y) > 1e-6) {
      const double hl = 8.0;
      doc.add(PathShape{{tip,
                         {tip.x - hl * std::cos(ang - 0.4), tip.y - hl * std::sin(ang - 0.4)},
                         {tip.x - hl * std::cos(ang + 0.4), tip.y - hl * std::sin(ang + 0.4)}},
                        true},
              filled(color), 21, "arrowhead", spec.id);
    }
    doc.add(TextItem{tip.x + 6 * std::cos(ang), tip.y + 6 * std::sin(ang) + 4, spec.id, 10,
                     std::cos(ang) >= 0 ? "start" : "end"},
            filled(color), 46, "loading-label", spec.id);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point2 s = score(i);
    const bool pareto = is_member(in.pareto_rows, i);
    const bool ref = is_member(in.reference_rows, i);
    MarkerItem mk{xs(s.x), ys(s.y), ref ? MarkerShape::Cross : MarkerShape::Circle, 5};
    const Style st = ref ? stroke(palette::kReference, 2) : filled(pareto ? palette::kPareto : palette::kOther);
    doc.add(mk, st, 40, ref ? "point reference" : (pareto ? "point pareto" : "point"), in.labels[i]).data = {s.x, s.y};
    label(doc, xs(s.x) + 7, ys(s.y) - 7, in.labels[i], 10, "start", 45, "point-label");
  }

  // Directions of increasing U and decreasing R in the PC plane.
  Point2 du{0, 0}, dr{0, 0};
  std::size_t nu = 0, nr = 0;
  for (const auto& s : in.specs) (s.block == Block::Utility ? nu : nr)++;
  for (std::size_t j = 0; j < in.specs.size(); ++j) {
    const Point2 l = loading(j);
    if (in.specs[j].block == Block::Utility) {
      du.x += l.x / nu, du.y += l.y / nu;
    } else {
      dr.x -= l.x / nr, dr.y -= l.y / nr;
    }
  }
  const Point2 base{f.right - 60, f.top + 50};
  for (const auto& [d, text, color] : {std::tuple{du, std::string("U \xE2\x86\x91"), palette::kUtility},
                                       std::tuple{dr, std::string("R \xE2\x86\x93"), palette::kRisk}}) {
    const double len = std::hypot(d.x, d.y);
    if (len < 1e-12) continue;
    const Point2 tip{base.x + 35 * d.x / len, base.y - 35 * d.y / len};
    doc.add(LineShape{base.x, base.y, tip.x, tip.y}, stroke(color, 2), 60, "direction", text);
    doc.add(TextItem{tip.x + 4, tip.y, text, 10}, filled(color), 60, "direction-label");
  }

  doc.legend.push_back({"composite Pareto-optimal", filled(palette::kPareto), MarkerShape::Circle});
  doc.legend.push_back({"dominated", filled(palette::kOther), MarkerShape::Circle});
  if (!in.reference_rows.empty())
    doc.legend.push_back({"original (reference)", stroke(palette::kReference, 2), MarkerShape::Cross});
  doc.legend.push_back({"risk loading", stroke(palette::kRisk, 1.5), MarkerShape::Square});
  doc.legend.push_back({"utility loading", stroke(palette::kUtility, 1.5), MarkerShape::Square});
  doc.metadata["orientation"] = "native";
  doc.metadata["loading_scale"] = fmt_fixed(arrow_scale, 4);
  return doc;
}

// ---------------------------------------------------------------------------
// SD-OD outlier map

inline std::string flag_color(OutlierFlag f) {
  switch (f) {
    case OutlierFlag::Regular: return palette::kOther;
    case OutlierFlag::GoodLeverage: return "#ff7f0e";
    case OutlierFlag::OrthogonalOutlier: return "#9467bd";
    case OutlierFlag::BadLeverage: return "#d62728";
  }
  return palette::kOther;
}

inline PlotDocument render_sdod(const SdOdDiagnostics& diag, std::span<const std::string> labels,
                                const std::string& model_name = "classical") {
  using namespace detail;
  if (labels.size() != diag.sd.size()) throw ValidationError("SD-OD labels do not match the diagnostics");
  PlotDocument doc;
  doc.kind = PlotKind::SdOdMap;
  title(doc, "Outlier map (" + model_name + " PCA, k = " + std::to_string(diag.components_used) + ")");
  Extent ex, ey;
  ex.add(0.0), ey.add(0.0), ex.add(diag.sd_cut), ey.add(diag.od_cut);
  for (double v : diag.sd) ex.add(v);
  for (double v : diag.od) ey.add(v);
  if (ey.hi <= 0.0) ey.add(1.0);
  if (ex.hi <= 0.0) ex.add(1.0);
  ex = Extent{0.0, ex.hi * 1.1};
  ey = Extent{0.0, ey.hi * 1.1};
  const Frame f;
  const Scale xs{ex.lo, ex.hi, f.left, f.right};
  const Scale ys{ey.lo, ey.hi, f.bottom, f.top};
  axes(doc, f, xs, ys, "score distance (SD)", "orthogonal distance (OD)");
  doc.add(LineShape{xs(diag.sd_cut), f.top, xs(diag.sd_cut), f.bottom}, stroke("#d62728", 1.2, "6,3"), 10,
          "sd_cut").data = {diag.sd_cut};
  if (!diag.od_degenerate)
    doc.add(LineShape{f.left, ys(diag.od_cut), f.right, ys(diag.od_cut)}, stroke("#d62728", 1.2, "6,3"), 10,
            "od_cut").data = {diag.od_cut};
  for (std::size_t i = 0; i < diag.sd.size(); ++i) {
    const double x = xs(diag.sd[i]), y = ys(diag.od[i]);
    doc.add(MarkerItem{x, y, MarkerShape::Circle, 5}, filled(flag_color(diag.flags[i])), 40,
            std::string("point ") + to_string(diag.flags[i]), labels[i]).data = {diag.sd[i], diag.od[i]};
    label(doc, x + 7, y - 7, labels[i], 10, "start", 45, "point-label");
  }
  for (auto fl : {OutlierFlag::Regular, OutlierFlag::GoodLeverage, OutlierFlag::OrthogonalOutlier,
                  OutlierFlag::BadLeverage})
    doc.legend.push_back({to_string(fl), filled(flag_color(fl)), MarkerShape::Circle});
  const double y0 = below_legend(doc);
  doc.add(TextItem{770, y0, "SD cutoff = " + fmt_fixed(diag.sd_cut, 4), 10}, Style{}, 60, "cutoff-label");
  doc.add(TextItem{770, y0 + 16,
                   diag.od_degenerate ? std::string("OD cutoff degenerate")
                                      : "OD cutoff = " + fmt_fixed(diag.od_cut, 4) + " (" + to_string(diag.mode) + ")",
                   10},
          Style{}, 60, "cutoff-label");
  doc.metadata["model"] = model_name;
  doc.metadata["od_cut_mode"] = to_string(diag.mode);
  return doc;
}

// ---------------------------------------------------------------------------
// Blockwise PCA map

inline constexpr double kContributionLabelThreshold = 0.05;

inline PlotDocument render_blockwise(const BlockwiseResult& blk, std::span<const std::string> labels,
                                     std::span<const MeasureSpec> specs,
                                     std::span<const std::size_t> pareto_rows) {
  using namespace detail;
  const auto n = static_cast<std::size_t>(blk.utility.scores.size());
  if (labels.size() != n || static_cast<std::size_t>(blk.risk.scores.size()) != n)
    throw ValidationError("blockwise labels do not match the scores");
  PlotDocument doc;
  doc.kind = PlotKind::BlockwiseRU;
  title(doc, "Blockwise PCA: utility PC1 vs. risk PC1");
  const Frame f{190, 60, 750, 470};
  Extent ex, ey;
  for (std::size_t i = 0; i < n; ++i) ex.add(blk.utility.scores(static_cast<Eigen::Index>(i))),
                                      ey.add(blk.risk.scores(static_cast<Eigen::Index>(i)));
  ex = ex.padded(0.06);
  ey = ey.padded(0.06);
  const Scale xs{ex.lo, ex.hi, f.left, f.right};
  const Scale ys{ey.lo, ey.hi, f.bottom, f.top};
  auto pct = [](double v) { return fmt_fixed(100.0 * v, 1) + "%"; };
  axes(doc, f, xs, ys, "utility PC1 (" + pct(blk.utility.explained_variance_ratio) + ")",
       "risk PC1 (" + pct(blk.risk.explained_variance_ratio) + ")");
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs(blk.utility.scores(static_cast<Eigen::Index>(i)));
    const double y = ys(blk.risk.scores(static_cast<Eigen::Index>(i)));
    const bool pareto = is_member(pareto_rows, i);
    doc.add(MarkerItem{x, y, MarkerShape::Circle, 5}, filled(pareto ? palette::kPareto : palette::kOther), 40,
            pareto ? "point pareto" : "point", labels[i]);
    label(doc, x + 7, y - 7, labels[i], 10, "start", 45, "point-label");
  }

  // Stacked 100% bars: utility below the x axis, risk left of the y axis.
  auto bar = [&](const BlockAxis& axis, bool horizontal) {
    double acc = 0.0;
    for (std::size_t s = 0; s < axis.contributions.size(); ++s) {
      const double c = axis.contributions[s];
      const auto& spec = specs[axis.columns[s]];
      const std::string edge = axis.loadings[s] >= 0.0 ? "#000000" : "#d62728";
      RectShape r;
      if (horizontal) {
        r = {f.left + acc * (f.right - f.left), 530, c * (f.right - f.left), 26};
      } else {
        r = {20, f.top + acc * (f.bottom - f.top), 26, c * (f.bottom - f.top)};
      }
      auto& seg = doc.add(r, filled_stroked(block_shade(axis.block, s, axis.contributions.size()), edge, 1.5), 30,
                          std::string("segment ") + to_string(axis.block), spec.id);
      seg.data = {c, axis.loadings[s]};
      if (c >= kContributionLabelThreshold) {
        const std::string text = truncate_label(spec.id, 10) + " " + fmt_fixed(100.0 * c, 0) + "%";
        if (horizontal)
          doc.add(TextItem{r.x + 0.5 * r.w, r.y + 17, text, 9, "middle"}, filled("#111111"), 35,
                  "segment-label", spec.id);
        else
          doc.add(TextItem{r.x + 17, r.y + 0.5 * r.h, text, 9, "middle", -90}, filled("#111111"), 35,
                  "segment-label", spec.id);
      }
      acc += c;
    }
  };
  bar(blk.utility, true);
  bar(blk.risk, false);
  doc.add(TextItem{f.left, 574, "utility PC1 contributions (squared loadings)", 10}, Style{}, 35, "bar-title");
  doc.add(TextItem{14, f.bottom + 20, "risk PC1 contributions", 10}, Style{}, 35, "bar-title");
  doc.legend.push_back({"composite Pareto-optimal", filled(palette::kPareto), MarkerShape::Circle});
  doc.legend.push_back({"dominated", filled(palette::kOther), MarkerShape::Circle});
  doc.legend.push_back({"positive loading (edge)", stroke("#000000", 1.5), MarkerShape::Square});
  doc.legend.push_back({"negative loading (edge)", stroke("#d62728", 1.5), MarkerShape::Square});
  return doc;
}

}  // namespace rumap

#endif  // RUMAP_RENDER_HPP_
