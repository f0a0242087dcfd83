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

// Backend-independent plot description and its SVG 1.1 serialization.

#ifndef RUMAP_SVG_HPP_
#define RUMAP_SVG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "rumap/geometry.hpp"

namespace rumap {

enum class PlotKind { Heatmap, DotPlot, CompositeRU, Rays, Pcp, Origami, Biplot, SdOdMap, BlockwiseRU };

// File-name stem used by the CLI.
inline const char* to_string(PlotKind k) {
  switch (k) {
    case PlotKind::Heatmap: return "heatmap";
    case PlotKind::DotPlot: return "dotplot";
    case PlotKind::CompositeRU: return "composite_ru";
    case PlotKind::Rays: return "rays";
    case PlotKind::Pcp: return "pcp";
    case PlotKind::Origami: return "origami";
    case PlotKind::Biplot: return "biplot";
    case PlotKind::SdOdMap: return "sdod";
    case PlotKind::BlockwiseRU: return "blockwise";
  }
  return "plot";
}

struct Style {
  std::string fill = "none";
  std::string stroke = "none";
  double stroke_width = 1.0;
  double opacity = 1.0;
  std::string dash;  // stroke-dasharray
};

struct RectShape {
  double x = 0, y = 0, w = 0, h = 0;
};
struct LineShape {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};
struct PathShape {
  std::vector<Point2> points;
  bool closed = false;
};
struct EllipseShape {
  double cx = 0, cy = 0, rx = 0, ry = 0;
  double angle_deg = 0;
};
enum class MarkerShape { Circle, Diamond, Square, Triangle, Cross, Star };
struct MarkerItem {
  double x = 0, y = 0;
  MarkerShape shape = MarkerShape::Circle;
  double size = 4;
};
struct TextItem {
  double x = 0, y = 0;
  std::string text;
  double size = 12;
  std::string anchor = "start";  // start | middle | end
  double rotate = 0;
  bool bold = false;
};

using Shape = std::variant<RectShape, LineShape, PathShape, EllipseShape, MarkerItem, TextItem>;

struct Primitive {
  Shape shape;
  Style style;
  int z = 0;
  std::string role;           // emitted as the class attribute
  std::string key;            // approach / measure the primitive belongs to
  std::string title;          // tooltip text, e.g. a truncated label in full
  std::vector<double> data;   // data-space values, not serialized
};

struct LegendEntry {
  std::string label;
  Style style;
  MarkerShape shape = MarkerShape::Square;
};

inline constexpr double kCanvasWidth = 960.0;
inline constexpr double kCanvasHeight = 640.0;
inline constexpr const char* kFontFamily = "Helvetica, Arial, sans-serif";

struct PlotDocument {
  PlotKind kind = PlotKind::Heatmap;
  double width = kCanvasWidth;
  double height = kCanvasHeight;
  std::string title;
  std::vector<Primitive> items;
  std::vector<LegendEntry> legend;
  std::map<std::string, std::string> metadata;

  Primitive& add(Shape s, Style st, int z, std::string role = {}, std::string key = {}) {
    items.push_back(Primitive{std::move(s), std::move(st), z, std::move(role), std::move(key), {}, {}});
    return items.back();
  }

  std::vector<const Primitive*> with_role(std::string_view role) const {
    std::vector<const Primitive*> out;
    for (const auto& p : items)
      if (p.role == role) out.push_back(&p);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Formatting helpers

// Fixed-point with `digits` decimals; negative zero printed as zero.
inline std::string fmt_fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline constexpr std::size_t kMaxLabelChars = 18;

// Labels longer than kMaxLabelChars keep their head and end in an ellipsis.
inline std::string truncate_label(const std::string& s, std::size_t max_chars = kMaxLabelChars) {
  // Count UTF-8 code points.
  std::size_t count = 0, cut = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      if (count == max_chars - 1) cut = i;
      ++count;
    }
  }
  if (count <= max_chars) return s;
  return s.substr(0, cut) + "\xE2\x80\xA6";
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string rgb(int r, int g, int b) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", std::clamp(r, 0, 255), std::clamp(g, 0, 255),
                std::clamp(b, 0, 255));
  return buf;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

class SvgWriter {
 public:
  SvgWriter(double w, double h) : w_(w), h_(h) {}

  std::string num_x(double v) const { return fmt_fixed(std::clamp(v, 0.0, w_)); }
  std::string num_y(double v) const { return fmt_fixed(std::clamp(v, 0.0, h_)); }

  static std::string style_attrs(const Style& s) {
    std::string out = " fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\"";
    if (s.stroke != "none") out += " stroke-width=\"" + fmt_fixed(s.stroke_width) + "\"";
    if (s.opacity < 1.0) out += " opacity=\"" + fmt_fixed(s.opacity) + "\"";
    if (!s.dash.empty()) out += " stroke-dasharray=\"" + s.dash + "\"";
    return out;
  }

  std::string points(std::span<const Point2> pts) const {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += num_x(pts[i].x) + "," + num_y(pts[i].y);
    }
    return out;
  }

  std::string marker_path(const MarkerItem& m) const {
    const double s = m.size;
    std::vector<Point2> pts;
    switch (m.shape) {
      case MarkerShape::Diamond:
        pts = {{m.x, m.y - s}, {m.x + s, m.y}, {m.x, m.y + s}, {m.x - s, m.y}};
        break;
      case MarkerShape::Square:
        pts = {{m.x - s, m.y - s}, {m.x + s, m.y - s}, {m.x + s, m.y + s}, {m.x - s, m.y + s}};
        break;
      case MarkerShape::Triangle:
        pts = {{m.x, m.y - s}, {m.x + s, m.y + s}, {m.x - s, m.y + s}};
        break;
      case MarkerShape::Star:
        for (int i = 0; i < 10; ++i) {
          const double r = i % 2 == 0 ? s * 1.4 : s * 0.6;
          const double a = -std::numbers::pi / 2 + i * std::numbers::pi / 5;
          pts.push_back({m.x + r * std::cos(a), m.y + r * std::sin(a)});
        }
        break;
      default:
        break;
    }
    std::string d = "M";
    for (std::size_t i = 0; i < pts.size(); ++i)
      d += (i ? " L" : "") + num_x(pts[i].x) + "," + num_y(pts[i].y);
    return d + " Z";
  }

  std::string element(const Primitive& p) const {
    std::string cls = p.role.empty() ? "" : " class=\"" + xml_escape(p.role) + "\"";
    std::string title = p.title.empty() ? "" : "<title>" + xml_escape(p.title) + "</title>";
    const std::string st = style_attrs(p.style);
    auto wrap = [&](const std::string& open, const std::string& tag) {
      if (title.empty()) return open + "/>";
      return open + ">" + title + "</" + tag + ">";
    };
    return std::visit(
        [&](const auto& s) -> std::string {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, RectShape>) {
            return wrap("<rect" + cls + " x=\"" + num_x(s.x) + "\" y=\"" + num_y(s.y) +
                            "\" width=\"" + fmt_fixed(std::max(0.0, std::min(s.w, w_ - std::clamp(s.x, 0.0, w_)))) +
                            "\" height=\"" + fmt_fixed(std::max(0.0, std::min(s.h, h_ - std::clamp(s.y, 0.0, h_)))) +
                            "\"" + st,
                        "rect");
          } else if constexpr (std::is_same_v<T, LineShape>) {
            return wrap("<line" + cls + " x1=\"" + num_x(s.x1) + "\" y1=\"" + num_y(s.y1) +
                            "\" x2=\"" + num_x(s.x2) + "\" y2=\"" + num_y(s.y2) + "\"" + st,
                        "line");
          } else if constexpr (std::is_same_v<T, PathShape>) {
            const char* tag = s.closed ? "polygon" : "polyline";
            return wrap(std::string("<") + tag + cls + " points=\"" + points(s.points) + "\"" + st, tag);
          } else if constexpr (std::is_same_v<T, EllipseShape>) {
            std::string tr;
            if (s.angle_deg != 0.0)
              tr = " transform=\"rotate(" + fmt_fixed(s.angle_deg) + " " + num_x(s.cx) + " " +
                   num_y(s.cy) + ")\"";
            return wrap("<ellipse" + cls + " cx=\"" + num_x(s.cx) + "\" cy=\"" + num_y(s.cy) +
                            "\" rx=\"" + fmt_fixed(s.rx) + "\" ry=\"" + fmt_fixed(s.ry) + "\"" + tr + st,
                        "ellipse");
          } else if constexpr (std::is_same_v<T, MarkerItem>) {
            if (s.shape == MarkerShape::Circle)
              return wrap("<circle" + cls + " cx=\"" + num_x(s.x) + "\" cy=\"" + num_y(s.y) +
                              "\" r=\"" + fmt_fixed(s.size) + "\"" + st,
                          "circle");
            if (s.shape == MarkerShape::Cross) {
              const double a = s.size;
              const std::string d = "M" + num_x(s.x - a) + "," + num_y(s.y - a) + " L" + num_x(s.x + a) +
                                    "," + num_y(s.y + a) + " M" + num_x(s.x - a) + "," + num_y(s.y + a) +
                                    " L" + num_x(s.x + a) + "," + num_y(s.y - a);
              return wrap("<path" + cls + " d=\"" + d + "\"" + st, "path");
            }
            return wrap("<path" + cls + " d=\"" + marker_path(s) + "\"" + st, "path");
          } else {
            std::string attrs = " x=\"" + num_x(s.x) + "\" y=\"" + num_y(s.y) + "\" font-size=\"" +
                                fmt_fixed(s.size) + "\"";
            if (s.anchor != "start") attrs += " text-anchor=\"" + s.anchor + "\"";
            if (s.bold) attrs += " font-weight=\"bold\"";
            if (s.rotate != 0.0)
              attrs += " transform=\"rotate(" + fmt_fixed(s.rotate) + " " + num_x(s.x) + " " +
                       num_y(s.y) + ")\"";
            std::string fill = p.style.fill == "none" ? "#222222" : p.style.fill;
            return "<text" + cls + attrs + " fill=\"" + fill + "\">" + title + xml_escape(s.text) +
                   "</text>";
          }
        },
        p.shape);
  }

 private:
  double w_, h_;
};

inline std::string legend_block(const PlotDocument& doc, const SvgWriter& w) {
  if (doc.legend.empty()) return {};
  std::string out = "<g class=\"legend\">\n";
  const double x = doc.width - 190.0;
  double y = 24.0;
  for (const auto& e : doc.legend) {
    Primitive sw{MarkerItem{x, y - 4, e.shape, 5}, e.style, 0, "legend-swatch", {}, {}, {}};
    Primitive tx{TextItem{x + 12, y, truncate_label(e.label, 28), 11}, Style{}, 0, "legend-label", {}, {}, {}};
    out += w.element(sw) + "\n" + w.element(tx) + "\n";
    y += 16.0;
  }
  return out + "</g>\n";
}

inline std::string body(const PlotDocument& doc) {
  SvgWriter w(doc.width, doc.height);
  std::vector<const Primitive*> order;
  for (const auto& p : doc.items) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const Primitive* a, const Primitive* b) { return a->z < b->z; });
  std::string out;
  out += "<title>" + xml_escape(doc.title) + "</title>\n";
  if (!doc.metadata.empty()) {
    out += "<desc>";
    bool first = true;
    for (const auto& [k, v] : doc.metadata) {
      out += (first ? "" : "; ") + xml_escape(k) + "=" + xml_escape(v);
      first = false;
    }
    out += "</desc>\n";
  }
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt_fixed(doc.width) + "\" height=\"" +
         fmt_fixed(doc.height) + "\" fill=\"#ffffff\"/>\n";
  for (const auto* p : order) out += w.element(*p) + "\n";
  out += legend_block(doc, w);
  return out;
}

inline std::string svg_open(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt_fixed(w) +
         "\" height=\"" + fmt_fixed(h) + "\" viewBox=\"0 0 " + fmt_fixed(w) + " " + fmt_fixed(h) +
         "\" font-family=\"" + kFontFamily + "\">\n";
}

}  // namespace detail

// Standalone SVG 1.1 document. Primitives are emitted in stable z order;
// every coordinate is clamped to the canvas.
inline std::string to_svg(const PlotDocument& doc) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" + detail::svg_open(doc.width, doc.height) +
         detail::body(doc) + "</svg>\n";
}

// Several documents side by side in one SVG, each in its own nested viewport.
inline std::string to_svg_panels(std::span<const PlotDocument> docs) {
  double w = 0.0, h = 0.0;
  for (const auto& d : docs) {
    w += d.width;
    h = std::max(h, d.height);
  }
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" + detail::svg_open(w, h);
  double x = 0.0;
  for (const auto& d : docs) {
    out += "<svg x=\"" + fmt_fixed(x) + "\" y=\"0\" width=\"" + fmt_fixed(d.width) + "\" height=\"" +
           fmt_fixed(d.height) + "\" viewBox=\"0 0 " + fmt_fixed(d.width) + " " + fmt_fixed(d.height) +
           "\">\n" + detail::body(d) + "</svg>\n";
    x += d.width;
  }
  return out + "</svg>\n";
}

}  // namespace rumap

#endif  // RUMAP_SVG_HPP_
