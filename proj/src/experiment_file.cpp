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

#include "irobust/experiment_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
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

struct KeyValue {
  std::string value;
  std::size_t line = 0;
};

using KvMap = std::map<std::string, KeyValue, std::less<>>;

double to_real(const KeyValue& kv, const std::string& key) {
  double x;
  if (!parse_double(kv.value, x)) {
    throw ParseError(key + " is not a decimal real", kv.line);
  }
  return x;
}

std::uint64_t to_u64(const KeyValue& kv, const std::string& key) {
  std::uint64_t x{};
  const char* first = kv.value.data();
  const char* last = first + kv.value.size();
  auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError(key + " is not an unsigned 64-bit integer", kv.line);
  }
  return x;
}

int to_int(const KeyValue& kv, const std::string& key) {
  int x{};
  const char* first = kv.value.data();
  const char* last = first + kv.value.size();
  auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError(key + " is not an integer", kv.line);
  }
  return x;
}

std::vector<int> to_int_list(const KeyValue& kv, const std::string& key) {
  std::vector<int> out;
  std::string_view rest(kv.value);
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view field = trim(rest.substr(0, comma));
    int x{};
    auto res = std::from_chars(field.data(), field.data() + field.size(), x);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
      throw ParseError(key + " must be a comma-separated integer list", kv.line);
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

// Parses `name(a)` or `name(a, b)`.
struct LawSpec {
  std::string name;
  std::vector<double> args;
};

LawSpec parse_law(const KeyValue& kv, const std::string& key) {
  std::string_view s = trim(std::string_view(kv.value));
  const std::size_t open = s.find('(');
  if (open == std::string_view::npos || s.empty() || s.back() != ')') {
    throw ParseError(key + " must look like name(arg, ...)", kv.line);
  }
  LawSpec law;
  law.name = std::string(trim(s.substr(0, open)));
  std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  while (true) {
    const std::size_t comma = inner.find(',');
    double x;
    if (!parse_double(trim(inner.substr(0, comma)), x)) {
      throw ParseError(key + ": argument is not a decimal real", kv.line);
    }
    law.args.push_back(x);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return law;
}

MidLaw make_mid_law(const KeyValue& kv) {
  const LawSpec law = parse_law(kv, "mid_law");
  if (law.name == "normal" && law.args.size() == 2) {
    return MidLaw::normal(law.args[0], law.args[1]);
  }
  if (law.name == "uniform" && law.args.size() == 2) {
    return MidLaw::uniform(law.args[0], law.args[1]);
  }
  throw ParseError("mid_law must be normal(mu, sigma) or uniform(a, b)", kv.line);
}

SprLaw make_spr_law(const KeyValue& kv) {
  const LawSpec law = parse_law(kv, "spr_law");
  if (law.name == "uniform" && law.args.size() == 2) {
    return SprLaw::uniform(law.args[0], law.args[1]);
  }
  if (law.name == "half_normal" && law.args.size() == 1) {
    return SprLaw::half_normal(law.args[0]);
  }
  if (law.name == "lognormal" && law.args.size() == 2) {
    return SprLaw::lognormal(law.args[0], law.args[1]);
  }
  throw ParseError(
      "spr_law must be uniform(a, b), half_normal(sigma) or lognormal(mu, sigma)", kv.line);
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in) {
  static const char* known_keys[] = {
      "mid_law",       "spr_law",      "theta",
      "sample_sizes",  "replications", "seed",
      "contamination.fraction", "contamination.mid_shift", "contamination.spr_shift",
  };

  KvMap kv;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected `key = value`", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    bool known = false;
    for (const char* k : known_keys) known |= key == k;
    if (!known) throw ParseError("unknown key `" + key + "`", line_no);
    if (kv.count(key)) throw ParseError("duplicate key `" + key + "`", line_no);
    kv.emplace(key, KeyValue{value, line_no});
  }

  auto required = [&](const char* key) -> const KeyValue& {
    auto it = kv.find(key);
    if (it == kv.end()) throw InvalidInput(std::string("missing required key `") + key + "`");
    return it->second;
  };

  ExperimentSpec spec;
  spec.distribution.mid_law = make_mid_law(required("mid_law"));
  spec.distribution.spr_law = make_spr_law(required("spr_law"));
  if (auto it = kv.find("theta"); it != kv.end()) spec.theta = to_real(it->second, "theta");
  spec.sample_sizes = to_int_list(required("sample_sizes"), "sample_sizes");
  spec.replications = to_int(required("replications"), "replications");
  spec.seed = to_u64(required("seed"), "seed");

  const bool has_contamination = kv.count("contamination.fraction") ||
                                 kv.count("contamination.mid_shift") ||
                                 kv.count("contamination.spr_shift");
  if (has_contamination) {
    Contamination c;
    if (auto it = kv.find("contamination.fraction"); it != kv.end()) {
      c.fraction = to_real(it->second, "contamination.fraction");
    }
    if (auto it = kv.find("contamination.mid_shift"); it != kv.end()) {
      c.mid_shift = to_real(it->second, "contamination.mid_shift");
    }
    if (auto it = kv.find("contamination.spr_shift"); it != kv.end()) {
      c.spr_shift = to_real(it->second, "contamination.spr_shift");
    }
    spec.distribution.contamination = c;
  }

  spec.validate();
  return spec;
}

ExperimentSpec read_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open experiment spec file: " + path);
  return parse_experiment_spec(in);
}

}  // namespace irobust
