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

// Measure-matrix data model: declared measures, approach rows, CSV ingestion
// and direction-harmonized min-max normalization.

#ifndef RUMAP_MEASURE_MODEL_HPP_
#define RUMAP_MEASURE_MODEL_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rumap/error.hpp"

namespace rumap {

enum class Block { Risk, Utility };

// Orientation of the RAW values of a measure.
enum class Direction { HigherIsBetter, LowerIsBetter };

inline const char* to_string(Block b) { return b == Block::Risk ? "risk" : "utility"; }
inline const char* to_string(Direction d) {
  return d == Direction::HigherIsBetter ? "higher" : "lower";
}

struct MeasureSpec {
  std::string id;
  std::string display_name;
  Block block = Block::Utility;
  Direction direction = Direction::HigherIsBetter;
};

struct ApproachRecord {
  std::string id;
  std::optional<std::string> dataset;
  bool is_reference = false;

  // Human-facing label; dataset-qualified in multi-dataset studies.
  std::string label() const { return dataset ? id + " [" + *dataset + "]" : id; }

  friend bool operator==(const ApproachRecord&, const ApproachRecord&) = default;
};

namespace detail {

inline std::vector<std::size_t> columns_of(std::span<const MeasureSpec> specs, Block b) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < specs.size(); ++j)
    if (specs[j].block == b) cols.push_back(j);
  return cols;
}

inline Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m, std::span<const std::size_t> cols) {
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    out.col(static_cast<Eigen::Index>(c)) = m.col(static_cast<Eigen::Index>(cols[c]));
  return out;
}

}  // namespace detail

// Common shape shared by the raw and the normalized matrix.
struct MatrixBase {
  std::vector<MeasureSpec> specs;
  std::vector<ApproachRecord> rows;
  Eigen::MatrixXd values;  // rows x measures

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_measures() const { return specs.size(); }

  std::vector<std::size_t> block_columns(Block b) const { return detail::columns_of(specs, b); }

  Eigen::MatrixXd block(Block b) const {
    const auto cols = block_columns(b);
    return detail::select_columns(values, cols);
  }

  std::vector<std::size_t> reference_rows() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].is_reference) out.push_back(i);
    return out;
  }

  std::optional<std::size_t> find_measure(std::string_view id) const {
    for (std::size_t j = 0; j < specs.size(); ++j)
      if (specs[j].id == id) return j;
    return std::nullopt;
  }
};

struct MeasureMatrix : MatrixBase {
  // Throws ValidationError when any structural invariant is violated.
  void validate() const;
};

// Values in [0, 1]; utility columns read higher = more utility, risk columns
// read higher = more disclosure risk.
struct NormalizedMatrix : MatrixBase {
  std::vector<double> raw_min;
  std::vector<double> raw_max;
  std::vector<std::string> warnings;

  // Maps a normalized value of measure j back to raw units.
  double to_raw(std::size_t j, double v) const;
};

inline void MeasureMatrix::validate() const {
  if (rows.size() < 2) throw ValidationError("measure matrix needs at least 2 rows, got " +
                                             std::to_string(rows.size()));
  if (detail::columns_of(specs, Block::Risk).empty())
    throw ValidationError("study declares no risk measure; at least 1 required");
  if (detail::columns_of(specs, Block::Utility).empty())
    throw ValidationError("study declares no utility measure; at least 1 required");
  if (values.rows() != static_cast<Eigen::Index>(rows.size()) ||
      values.cols() != static_cast<Eigen::Index>(specs.size()))
    throw ValidationError("value matrix shape does not match rows x measures");
  std::set<std::string> ids;
  for (const auto& s : specs)
    if (!ids.insert(s.id).second) throw ValidationError("duplicate measure id '" + s.id + "'");
  std::set<std::pair<std::string, std::string>> keys;
  std::map<std::string, int> refs_per_dataset;
  for (const auto& r : rows) {
    const std::string ds = r.dataset.value_or("");
    if (!keys.emplace(r.id, ds).second)
      throw ValidationError("duplicate approach '" + r.label() + "'");
    if (r.is_reference && ++refs_per_dataset[ds] > 1)
      throw ValidationError("more than one reference row for dataset '" + ds + "'");
  }
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j)
      if (!std::isfinite(values(i, j)))
        throw ValidationError("non-finite value at row '" + rows[static_cast<std::size_t>(i)].label() +
                              "', column '" + specs[static_cast<std::size_t>(j)].id + "'");
}

inline double NormalizedMatrix::to_raw(std::size_t j, double v) const {
  const auto& s = specs[j];
  const bool flipped = (s.block == Block::Utility) != (s.direction == Direction::HigherIsBetter);
  const double scaled = flipped ? 1.0 - v : v;
  return raw_min[j] + scaled * (raw_max[j] - raw_min[j]);
}

struct NormalizeOptions {
  // When set, min/max are taken over non-reference rows only and the
  // reference row is clamped into [0, 1].
  bool exclude_reference_from_range = false;
};

// Per column: (v - min) / (max - min), then 1 - v where the raw orientation
// disagrees with the block semantics. Constant columns become 0.5.
inline NormalizedMatrix harmonize_and_normalize(const MeasureMatrix& m,
                                                NormalizeOptions opts = {}) {
  NormalizedMatrix out;
  out.specs = m.specs;
  out.rows = m.rows;
  out.values.resize(m.values.rows(), m.values.cols());
  out.raw_min.resize(m.specs.size());
  out.raw_max.resize(m.specs.size());
  const Eigen::Index n = m.values.rows();
  for (std::size_t j = 0; j < m.specs.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (opts.exclude_reference_from_range && m.rows[static_cast<std::size_t>(i)].is_reference)
        continue;
      lo = std::min(lo, m.values(i, col));
      hi = std::max(hi, m.values(i, col));
    }
    if (!std::isfinite(lo)) {  // every row was a reference row
      lo = m.values.col(col).minCoeff();
      hi = m.values.col(col).maxCoeff();
    }
    out.raw_min[j] = lo;
    out.raw_max[j] = hi;
    const auto& s = m.specs[j];
    const bool flip = (s.block == Block::Utility) != (s.direction == Direction::HigherIsBetter);
    if (!(hi > lo)) {
      out.values.col(col).setConstant(0.5);
      out.warnings.push_back("measure '" + s.id + "' is constant; normalized to 0.5");
      continue;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      double v = (m.values(i, col) - lo) / (hi - lo);
      v = std::clamp(v, 0.0, 1.0);
      out.values(i, col) = flip ? 1.0 - v : v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV ingestion

namespace detail {

// RFC 4180 style splitter: quoted fields, doubled quotes, CRLF or LF.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
      static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF)
    text.remove_prefix(3);
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        any = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        if (any || !field.empty()) {
          record.push_back(std::move(field));
          records.push_back(std::move(record));
        }
        record.clear();
        field.clear();
        any = false;
        break;
      default:
        field += c;
        any = true;
    }
  }
  if (in_quotes) throw ValidationError("CSV ends inside a quoted field");
  if (any || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace detail

// Parses the measure CSV. Columns are `approach[,dataset],<measure ids>`; the
// result's column order is risk measures then utility measures, each in the
// order the specs declare them.
inline MeasureMatrix ingest(std::string_view csv, std::span<const MeasureSpec> declared,
                            std::string_view reference_id) {
  std::vector<MeasureSpec> specs;
  for (Block b : {Block::Risk, Block::Utility})
    for (const auto& s : declared)
      if (s.block == b) specs.push_back(s);
  if (detail::columns_of(specs, Block::Risk).empty())
    throw ValidationError("config declares no risk measure; at least 1 required");
  if (detail::columns_of(specs, Block::Utility).empty())
    throw ValidationError("config declares no utility measure; at least 1 required");

  const auto records = detail::parse_csv(csv);
  if (records.empty()) throw ValidationError("CSV is empty; expected a header row");
  std::vector<std::string> header;
  for (const auto& h : records.front()) header.push_back(detail::trim(h));

  std::optional<std::size_t> dataset_col;
  std::map<std::string, std::size_t> measure_col;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c] == "dataset" && !dataset_col) {
      dataset_col = c;
      continue;
    }
    bool known = false;
    for (const auto& s : specs) known = known || s.id == header[c];
    if (!known) throw ValidationError("CSV column '" + header[c] + "' is not a declared measure");
    if (!measure_col.emplace(header[c], c).second)
      throw ValidationError("CSV column '" + header[c] + "' appears twice");
  }
  for (const auto& s : specs)
    if (!measure_col.count(s.id))
      throw ValidationError("CSV is missing the column for measure '" + s.id + "'");

  MeasureMatrix m;
  m.specs = specs;
  const std::size_t n = records.size() - 1;
  m.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(specs.size()));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& rec = records[r + 1];
    const std::size_t line = r + 2;
    if (rec.size() != header.size())
      throw ValidationError("CSV line " + std::to_string(line) + " has " +
                            std::to_string(rec.size()) + " fields, header has " +
                            std::to_string(header.size()));
    ApproachRecord a;
    a.id = detail::trim(rec[0]);
    if (a.id.empty()) throw ValidationError("CSV line " + std::to_string(line) + " has an empty approach id");
    if (dataset_col) {
      auto ds = detail::trim(rec[*dataset_col]);
      if (!ds.empty()) a.dataset = std::move(ds);
    }
    a.is_reference = !reference_id.empty() && a.id == reference_id;
    for (std::size_t j = 0; j < specs.size(); ++j) {
      const std::string cell = detail::trim(rec[measure_col.at(specs[j].id)]);
      const auto v = detail::parse_number(cell);
      if (!v)
        throw ValidationError("invalid value '" + cell + "' at row '" + a.label() + "' (line " +
                              std::to_string(line) + "), column '" + specs[j].id +
                              "'; expected a finite number");
      m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = *v;
    }
    m.rows.push_back(std::move(a));
  }
  m.validate();
  return m;
}

}  // namespace rumap

#endif  // RUMAP_MEASURE_MODEL_HPP_
