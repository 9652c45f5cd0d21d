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

#include "irobust/interval.hpp"

namespace irobust {

enum class DatasetFormat { inf_sup, mid_spr };

// Dataset files are two-column CSV, UTF-8, LF or CRLF, '#' comment lines
// ignored. The header must be exactly `inf,sup` or `mid,spr`.

/// Throws ParseError (line-numbered) on malformed content, InvalidInput when
/// the file has no data rows or cannot be opened.
Sample read_dataset(const std::string& path);
Sample parse_dataset(std::istream& in);

void write_dataset(std::ostream& out, const Sample& sample, DatasetFormat format);

}  // namespace irobust
