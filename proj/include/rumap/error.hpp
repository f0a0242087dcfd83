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

#ifndef RUMAP_ERROR_HPP_
#define RUMAP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rumap {

// Raised when inputs (CSV, config, thresholds, arguments) are malformed.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when well-formed inputs cannot be analysed (degenerate variance,
// out-of-range component counts, ...). The CLI maps this to exit code 2.
class AnalysisError : public std::runtime_error {
 public:
  explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rumap

#endif  // RUMAP_ERROR_HPP_
