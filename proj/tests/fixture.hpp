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

#ifndef RUMAP_TESTS_FIXTURE_HPP_
#define RUMAP_TESTS_FIXTURE_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "rumap/config.hpp"
#include "rumap/pipeline.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(RUMAP_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline rumap::StudyConfig config(bool with_thresholds = false) {
  auto cfg = rumap::parse_config(read("study.json"));
  if (with_thresholds) cfg.options.thresholds = rumap::parse_thresholds(read("thresholds.json"));
  return cfg;
}

inline rumap::Analysis analysis(bool with_thresholds = false) {
  const auto cfg = config(with_thresholds);
  return rumap::analyze(rumap::ingest(read("measures.csv"), cfg), cfg);
}

}  // namespace fixture

#endif  // RUMAP_TESTS_FIXTURE_HPP_
