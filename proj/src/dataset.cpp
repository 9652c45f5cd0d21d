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

#include "irobust/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "irobust/number_format.hpp"

namespace irobust {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Strips a trailing CR so CRLF input parses like LF input.
std::string_view logical_line(const std::string& raw) {
  std::string_view s(raw);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view s) { return s.empty() || s.front() == '#'; }

struct Row {
  double first = 0.0;
  double second = 0.0;
};

Row parse_row(std::string_view line, std::size_t line_no) {
  const std::size_t comma = line.find(',');
  if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("expected exactly two comma-separated fields", line_no);
  }
  Row row;
  if (!parse_double(trim(line.substr(0, comma)), row.first) ||
      !parse_double(trim(line.substr(comma + 1)), row.second)) {
    throw ParseError("field is not a decimal real", line_no);
  }
  return row;
}

}  // namespace

Sample parse_dataset(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  DatasetFormat format = DatasetFormat::inf_sup;
  std::vector<Interval> items;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = logical_line(raw);
    if (skippable(line)) continue;

    if (!have_header) {
      if (line == "inf,sup") {
        format = DatasetFormat::inf_sup;
      } else if (line == "mid,spr") {
        format = DatasetFormat::mid_spr;
      } else {
        throw ParseError("header must be exactly `inf,sup` or `mid,spr`", line_no);
      }
      have_header = true;
      continue;
    }

    const Row row = parse_row(line, line_no);
    try {
      if (format == DatasetFormat::inf_sup) {
        items.emplace_back(row.first, row.second);
      } else {
        items.push_back(Interval::from_mid_spr(row.first, row.second));
      }
    } catch (const InvalidInput& e) {
      throw ParseError(e.what(), line_no);
    } catch (const ArithmeticOverflow& e) {
      throw ParseError(e.what(), line_no);
    }
  }

  if (!have_header) throw ParseError("missing dataset header", line_no + 1);
  if (items.empty()) throw InvalidInput("dataset contains no data rows");
  return Sample(std::move(items));
}

Sample read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open dataset file: " + path);
  return parse_dataset(in);
}

void write_dataset(std::ostream& out, const Sample& sample, DatasetFormat format) {
  if (format == DatasetFormat::inf_sup) {
    out << "inf,sup\n";
    for (const Interval& k : sample) {
      out << format_double(k.inf()) << ',' << format_double(k.sup()) << '\n';
    }
  } else {
    out << "mid,spr\n";
    for (const Interval& k : sample) {
      out << format_double(k.mid()) << ',' << format_double(k.spr()) << '\n';
    }
  }
}

}  // namespace irobust
