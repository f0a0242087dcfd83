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

// Study configuration: measure declarations, reference id and run options.

#ifndef RUMAP_CONFIG_HPP_
#define RUMAP_CONFIG_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rumap/diagnostics.hpp"
#include "rumap/error.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/ordering.hpp"
#include "rumap/profiles.hpp"

namespace rumap {

using Json = nlohmann::ordered_json;

inline OdCutMode parse_od_cut_mode(std::string_view s) {
  if (s == "hubert") return OdCutMode::Hubert;
  if (s == "literal") return OdCutMode::Literal;
  throw ValidationError("od_cut_mode must be 'hubert' or 'literal', got '" + std::string(s) + "'");
}

struct StudyOptions {
  bool exclude_reference_from_range = false;
  bool exclude_reference_from_pca = false;
  bool orient = false;
  OdCutMode od_cut_mode = OdCutMode::Hubert;
  double r_aux = kDefaultAuxRadius;
  Linkage linkage = Linkage::Complete;
  std::uint64_t seed = 42;
  bool robust = false;
  std::map<std::string, double> thresholds;  // measure id -> normalized cutoff
  std::map<std::string, double> weights;     // measure id -> weight, default 1
  std::vector<std::string> origami_selection;  // empty: composite Pareto set
  std::string output_dir = "out";
};

struct StudyConfig {
  std::vector<MeasureSpec> measures;
  std::string reference = "original";
  StudyOptions options;
};

namespace detail {

inline std::string field_type(const Json& j) { return j.type_name(); }

template <typename T>
T get_field(const Json& obj, const std::string& key, const std::string& where,
            const Json::value_t expected) {
  const Json& v = obj.at(key);
  const bool ok = expected == Json::value_t::number_float ? v.is_number()
                  : expected == Json::value_t::number_unsigned
                      ? (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0))
                      : v.type() == expected;
  if (!ok) throw ValidationError(where + key + ": expected " + Json(expected).type_name() +
                                 " value, got " + field_type(v));
  return v.get<T>();
}

inline std::map<std::string, double> number_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object of measure id -> number");
  std::map<std::string, double> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number() || !std::isfinite(v.get<double>()))
      throw ValidationError(where + "." + k + ": expected a finite number");
    out[k] = v.get<double>();
  }
  return out;
}

}  // namespace detail

// Reads a thresholds document: either {"RepU": 0.3, ...} or
// {"thresholds": {...}}.
inline std::map<std::string, double> parse_thresholds(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("thresholds file is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("thresholds")) return detail::number_map(j["thresholds"], "thresholds");
  return detail::number_map(j, "thresholds");
}

inline void apply_options(StudyOptions& o, const Json& j) {
  if (!j.is_object()) throw ValidationError("options: expected an object");
  static const std::set<std::string> known = {
      "exclude_reference_from_range", "exclude_reference_from_pca", "orient", "od_cut_mode", "r_aux",
      "linkage", "seed", "robust", "thresholds", "weights", "origami_selection", "output_dir"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw ValidationError("options." + k + ": unknown option");
  using VT = Json::value_t;
  const std::string w = "options.";
  if (j.contains("exclude_reference_from_range"))
    o.exclude_reference_from_range = detail::get_field<bool>(j, "exclude_reference_from_range", w, VT::boolean);
  if (j.contains("exclude_reference_from_pca"))
    o.exclude_reference_from_pca = detail::get_field<bool>(j, "exclude_reference_from_pca", w, VT::boolean);
  if (j.contains("orient")) o.orient = detail::get_field<bool>(j, "orient", w, VT::boolean);
  if (j.contains("robust")) o.robust = detail::get_field<bool>(j, "robust", w, VT::boolean);
  if (j.contains("od_cut_mode"))
    o.od_cut_mode = parse_od_cut_mode(detail::get_field<std::string>(j, "od_cut_mode", w, VT::string));
  if (j.contains("linkage")) o.linkage = parse_linkage(detail::get_field<std::string>(j, "linkage", w, VT::string));
  if (j.contains("r_aux")) o.r_aux = detail::get_field<double>(j, "r_aux", w, VT::number_float);
  if (j.contains("seed")) o.seed = detail::get_field<std::uint64_t>(j, "seed", w, VT::number_unsigned);
  if (j.contains("output_dir")) o.output_dir = detail::get_field<std::string>(j, "output_dir", w, VT::string);
  if (j.contains("thresholds")) o.thresholds = detail::number_map(j["thresholds"], "options.thresholds");
  if (j.contains("weights")) o.weights = detail::number_map(j["weights"], "options.weights");
  if (j.contains("origami_selection")) {
    const auto& s = j["origami_selection"];
    if (!s.is_array()) throw ValidationError("options.origami_selection: expected an array of approach ids");
    o.origami_selection.clear();
    for (const auto& id : s) {
      if (!id.is_string()) throw ValidationError("options.origami_selection: expected string ids");
      o.origami_selection.push_back(id.get<std::string>());
    }
  }
}

inline MeasureSpec parse_measure(const Json& m, std::size_t index) {
  const std::string where = "measures[" + std::to_string(index) + "].";
  if (!m.is_object()) throw ValidationError("measures[" + std::to_string(index) + "]: expected an object");
  for (const char* key : {"id", "block", "direction"})
    if (!m.contains(key)) throw ValidationError(where + key + ": required field is missing");
  using VT = Json::value_t;
  MeasureSpec s;
  s.id = detail::get_field<std::string>(m, "id", where, VT::string);
  if (s.id.empty()) throw ValidationError(where + "id: must not be empty");
  s.display_name = m.contains("display_name") ? detail::get_field<std::string>(m, "display_name", where, VT::string) : s.id;
  const auto block = detail::get_field<std::string>(m, "block", where, VT::string);
  if (block == "risk") s.block = Block::Risk;
  else if (block == "utility") s.block = Block::Utility;
  else throw ValidationError(where + "block: must be 'risk' or 'utility', got '" + block + "'");
  const auto dir = detail::get_field<std::string>(m, "direction", where, VT::string);
  if (dir == "higher") s.direction = Direction::HigherIsBetter;
  else if (dir == "lower") s.direction = Direction::LowerIsBetter;
  else throw ValidationError(where + "direction: must be 'higher' or 'lower', got '" + dir + "'");
  return s;
}

inline StudyConfig parse_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config: expected a JSON object at top level");
  for (const auto& [k, v] : j.items())
    if (k != "measures" && k != "reference" && k != "options")
      throw ValidationError("config." + k + ": unknown field");
  if (!j.contains("measures") || !j["measures"].is_array())
    throw ValidationError("config.measures: required array of measure declarations is missing");
  StudyConfig cfg;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j["measures"].size(); ++i) {
    auto s = parse_measure(j["measures"][i], i);
    if (!seen.insert(s.id).second)
      throw ValidationError("measures[" + std::to_string(i) + "].id: duplicate measure id '" + s.id + "'");
    cfg.measures.push_back(std::move(s));
  }
  if (j.contains("reference")) {
    if (!j["reference"].is_string()) throw ValidationError("config.reference: expected a string approach id");
    cfg.reference = j["reference"].get<std::string>();
  }
  if (j.contains("options")) apply_options(cfg.options, j["options"]);
  return cfg;
}

// Range checks that need the measure list.
inline void validate_options(const StudyConfig& cfg) {
  const auto& o = cfg.options;
  if (!(o.r_aux > 0.0 && o.r_aux < 1.0)) throw ValidationError("options.r_aux: must lie in (0, 1)");
  std::set<std::string> ids;
  for (const auto& m : cfg.measures) ids.insert(m.id);
  for (const auto& [k, v] : o.thresholds) {
    if (!ids.count(k)) throw ValidationError("thresholds." + k + ": unknown measure id");
    if (v < 0.0 || v > 1.0) throw ValidationError("thresholds." + k + ": must lie in [0, 1]");
  }
  for (const auto& [k, v] : o.weights) {
    if (!ids.count(k)) throw ValidationError("weights." + k + ": unknown measure id");
    if (v < 0.0) throw ValidationError("weights." + k + ": must be non-negative");
  }
}

inline Json options_to_json(const StudyOptions& o) {
  Json j;
  j["exclude_reference_from_range"] = o.exclude_reference_from_range;
  j["exclude_reference_from_pca"] = o.exclude_reference_from_pca;
  j["orient"] = o.orient;
  j["od_cut_mode"] = to_string(o.od_cut_mode);
  j["r_aux"] = o.r_aux;
  j["linkage"] = to_string(o.linkage);
  j["seed"] = o.seed;
  j["robust"] = o.robust;
  j["thresholds"] = Json::object();
  for (const auto& [k, v] : o.thresholds) j["thresholds"][k] = v;
  j["weights"] = Json::object();
  for (const auto& [k, v] : o.weights) j["weights"][k] = v;
  j["origami_selection"] = o.origami_selection;
  j["output_dir"] = o.output_dir;
  return j;
}

// Ingests the CSV against the config's measure list and reference id.
inline MeasureMatrix ingest(std::string_view csv, const StudyConfig& cfg) {
  return ingest(csv, cfg.measures, cfg.reference);
}

}  // namespace rumap

#endif  // RUMAP_CONFIG_HPP_
