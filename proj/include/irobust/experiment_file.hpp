// Copyright 2026 The interval-robust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include "irobust/simulation.hpp"

namespace irobust {

// Experiment files are flat key-value text, one `key = value` per line,
// '#' comments ignored. Keys:
//
//   mid_law       = normal(mu, sigma) | uniform(a, b)        (required)
//   spr_law       = uniform(a, b) | half_normal(sigma)
//                   | lognormal(mu, sigma)                   (required)
//   theta         = positive real                            (default 1)
//   sample_sizes  = comma-separated, strictly ascending      (required)
//   replications  = positive integer                         (required)
//   seed          = 64-bit unsigned integer                  (required)
//   contamination.fraction  = real in [0, 1)                 (optional)
//   contamination.mid_shift = real                           (optional)
//   contamination.spr_shift = real >= 0                      (optional)

/// Throws ParseError on malformed lines or unknown/duplicate keys,
/// InvalidInput on missing keys or invalid values.
ExperimentSpec read_experiment_spec(const std::string& path);
ExperimentSpec parse_experiment_spec(std::istream& in);

}  // namespace irobust
