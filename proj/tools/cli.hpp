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

// Command-line front end: rumap <subcommand> --config study.json --data measures.csv

#ifndef RUMAP_TOOLS_CLI_HPP_
#define RUMAP_TOOLS_CLI_HPP_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "rumap/rumap.hpp"

namespace rumap::cli {

inline constexpr const char* kVersion = "1.0.0";

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw AnalysisError("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

inline std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(flag + ": cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to a temporary sibling and renames it into place.
inline void write_atomic(const std::filesystem::path& path, std::string_view content) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("--out: cannot write '" + tmp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ValidationError("--out: write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ValidationError("--out: cannot rename '" + tmp + "' to '" + path.string() + "': " + ec.message());
}

struct Flags {
  std::string config;
  std::string data;
  std::string out;
  bool exclude_reference_from_range = false;
  bool orient = false;
  std::string od_cut;
  std::optional<double> r_aux;
  std::string linkage;
  std::optional<std::uint64_t> seed;
  bool robust = false;
  std::string thresholds;
};

struct Study {
  StudyConfig config;
  std::string config_text;
  std::string data_text;
  std::string thresholds_text;
};

// Config first, then flags on top.
inline Study load_study(const Flags& f) {
  if (f.config.empty()) throw ValidationError("--config: required; pass the study JSON file");
  if (f.data.empty()) throw ValidationError("--data: required; pass the measure CSV file");
  Study s;
  s.config_text = read_file(f.config, "--config");
  s.data_text = read_file(f.data, "--data");
  s.config = parse_config(s.config_text);
  auto& o = s.config.options;
  if (f.exclude_reference_from_range) o.exclude_reference_from_range = true;
  if (f.orient) o.orient = true;
  if (f.robust) o.robust = true;
  if (!f.od_cut.empty()) o.od_cut_mode = parse_od_cut_mode(f.od_cut);
  if (f.r_aux) o.r_aux = *f.r_aux;
  if (!f.linkage.empty()) o.linkage = parse_linkage(f.linkage);
  if (f.seed) o.seed = *f.seed;
  if (!f.out.empty()) o.output_dir = f.out;
  if (!f.thresholds.empty()) {
    s.thresholds_text = read_file(f.thresholds, "--thresholds");
    o.thresholds = parse_thresholds(s.thresholds_text);
  }
  validate_options(s.config);
  return s;
}

inline std::string validation_summary(const Study& s, const MeasureMatrix& m) {
  std::ostringstream os;
  const auto& cfg = s.config;
  std::size_t nr = 0, nu = 0;
  for (const auto& x : cfg.measures) (x.block == Block::Risk ? nr : nu)++;
  os << "config: " << cfg.measures.size() << " measures (" << nr << " risk, " << nu << " utility), reference '"
     << cfg.reference << "'\n";
  std::set<std::string> datasets;
  for (const auto& r : m.rows)
    if (r.dataset) datasets.insert(*r.dataset);
  os << "data: " << m.num_rows() << " approaches, " << datasets.size() << " datasets, "
     << m.reference_rows().size() << " reference rows\n";
  os << "measures:\n";
  for (std::size_t j = 0; j < m.num_measures(); ++j) {
    const auto& sp = m.specs[j];
    os << "  " << sp.id << "  " << to_string(sp.block) << "  " << to_string(sp.direction) << "-is-better  ["
       << fmt_fixed(m.values.col(static_cast<Eigen::Index>(j)).minCoeff(), 4) << ", "
       << fmt_fixed(m.values.col(static_cast<Eigen::Index>(j)).maxCoeff(), 4) << "]\n";
  }
  if (m.reference_rows().empty()) os << "warning: reference approach '" << cfg.reference << "' not present in the data\n";
  os << "ok\n";
  return os.str();
}

inline Json manifest_json(const Study& s, const std::vector<std::pair<std::string, std::string>>& artifacts) {
  Json j;
  j["tool"] = "rumap";
  j["version"] = kVersion;
  j["inputs"] = Json{{"config_sha256", sha256_hex(s.config_text)}, {"data_sha256", sha256_hex(s.data_text)}};
  if (!s.thresholds_text.empty()) j["inputs"]["thresholds_sha256"] = sha256_hex(s.thresholds_text);
  Json opts = options_to_json(s.config.options);
  opts.erase("output_dir");
  j["options"] = opts;
  j["reference"] = s.config.reference;
  auto sorted = artifacts;
  std::sort(sorted.begin(), sorted.end());
  j["artifacts"] = Json::array();
  for (const auto& [name, content] : sorted)
    j["artifacts"].push_back(Json{{"name", name}, {"bytes", content.size()}, {"sha256", sha256_hex(content)}});
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Prints `content` or, with --out, writes it to <out>/<name>.
inline void emit(const Flags& f, const std::string& name, const std::string& content, std::ostream& out) {
  if (f.out.empty()) {
    out << content;
    return;
  }
  std::filesystem::create_directories(f.out);
  write_atomic(std::filesystem::path(f.out) / name, content);
  out << "wrote " << (std::filesystem::path(f.out) / name).string() << "\n";
}

inline std::vector<std::pair<std::string, std::string>> report_artifacts(const Analysis& a) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("normalized.json", dump(normalized_json(a)));
  out.emplace_back("pareto.json", dump(pareto_json(a)));
  out.emplace_back("composite.json", dump(composite_json(a)));
  out.emplace_back("pca.json", dump(pca_json(a)));
  out.emplace_back("profiles.json", dump(profiles_json(a)));
  for (auto& svg : render_report_svgs(a)) out.emplace_back(svg.name, std::move(svg.content));
  return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Risk-utility analysis of anonymization approaches"};
  app.name("rumap");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config, "study configuration JSON");
  app.add_option("--data", f.data, "measure CSV: approach[,dataset],<measure ids>");
  app.add_option("--out", f.out, "output directory");
  app.add_flag("--exclude-reference-from-range", f.exclude_reference_from_range,
               "leave the reference row out of min-max ranges");
  app.add_flag("--orient", f.orient, "orient PCs so corr(PC1,U) >= 0 and corr(PC2,-R) >= 0");
  app.add_option("--od-cut", f.od_cut, "OD cutoff rule")->check(CLI::IsMember({"hubert", "literal"}));
  app.add_option("--r-aux", f.r_aux, "origami auxiliary radius in (0,1)");
  app.add_option("--linkage", f.linkage, "heatmap row clustering")->check(CLI::IsMember({"complete", "average", "single"}));
  app.add_option("--seed", f.seed, "seed for robust PCA directions");
  app.add_flag("--robust", f.robust, "use robust PCA for SD-OD diagnostics");
  app.add_option("--thresholds", f.thresholds, "JSON file of per-measure acceptance thresholds");

  auto* validate = app.add_subcommand("validate", "check the config and data, print a schema summary");
  auto* normalize = app.add_subcommand("normalize", "harmonize directions and min-max normalize");
  auto* pareto = app.add_subcommand("pareto", "full and composite Pareto sets, knee, trade-off slopes");
  auto* composite = app.add_subcommand("composite", "composite scores and reliability");
  auto* pca = app.add_subcommand("pca", "PCA, alignment, SD-OD diagnostics, blockwise PCA");
  auto* profiles = app.add_subcommand("profiles", "origami profiles, areas and PCP lines");
  auto* plot = app.add_subcommand("plot", "render one figure as SVG");
  std::string kind;
  plot->add_option("kind", kind, "heatmap, dotplot, composite_ru, rays, pcp, origami, biplot, sdod, blockwise")
      ->required();
  auto* report = app.add_subcommand("report", "run everything and write all artifacts with a manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << " (see --help)\n";
    return 1;
  }

  try {
    const Study s = load_study(f);
    const MeasureMatrix raw = ingest(s.data_text, s.config);
    if (validate->parsed()) {
      out << validation_summary(s, raw);
      return 0;
    }
    const Analysis a = analyze(raw, s.config);
    for (const auto& w : a.warnings) err << "warning: " << w << "\n";
    if (normalize->parsed()) emit(f, "normalized.json", dump(normalized_json(a)), out);
    if (pareto->parsed()) emit(f, "pareto.json", dump(pareto_json(a)), out);
    if (composite->parsed()) emit(f, "composite.json", dump(composite_json(a)), out);
    if (pca->parsed()) emit(f, "pca.json", dump(pca_json(a)), out);
    if (profiles->parsed()) {
      emit(f, "profiles.json", dump(profiles_json(a)), out);
      if (!f.out.empty()) out << area_table(a);
    }
    if (plot->parsed()) {
      const PlotKind k = parse_plot_kind(kind);
      emit(f, std::string(to_string(k)) + ".svg", to_svg(render_plot(a, k)), out);
    }
    if (report->parsed()) {
      Flags rf = f;
      rf.out = s.config.options.output_dir;
      const auto artifacts = report_artifacts(a);
      std::filesystem::create_directories(rf.out);
      for (const auto& [name, content] : artifacts) write_atomic(std::filesystem::path(rf.out) / name, content);
      write_atomic(std::filesystem::path(rf.out) / "manifest.json", dump(manifest_json(s, artifacts)));
      out << "wrote " << artifacts.size() << " artifacts and manifest.json to " << rf.out << "\n";
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const AnalysisError& e) {
    err << "analysis error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rumap::cli

#endif  // RUMAP_TOOLS_CLI_HPP_
