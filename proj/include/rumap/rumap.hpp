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

// Umbrella header.

#ifndef RUMAP_RUMAP_HPP_
#define RUMAP_RUMAP_HPP_

#include "rumap/artifacts.hpp"
#include "rumap/composites.hpp"
#include "rumap/config.hpp"
#include "rumap/diagnostics.hpp"
#include "rumap/error.hpp"
#include "rumap/geometry.hpp"
#include "rumap/measure_model.hpp"
#include "rumap/ordering.hpp"
#include "rumap/pareto.hpp"
#include "rumap/pca.hpp"
#include "rumap/pipeline.hpp"
#include "rumap/profiles.hpp"
#include "rumap/projection.hpp"
#include "rumap/render.hpp"
#include "rumap/stats.hpp"
#include "rumap/svg.hpp"

#endif  // RUMAP_RUMAP_HPP_
