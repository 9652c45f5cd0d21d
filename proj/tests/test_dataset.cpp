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

#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "irobust/dataset.hpp"
#include "irobust/number_format.hpp"
#include "test_util.hpp"

using namespace irobust;

namespace {

Sample parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

}  // namespace

TEST_CASE("parse inf,sup dataset") {
  const Sample s = parse("inf,sup\n1,2\n-3.5,0\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Interval(1, 2));
  CHECK(s[1] == Interval(-3.5, 0));
}

TEST_CASE("parse mid,spr dataset") {
  const Sample s = parse("mid,spr\n1,0.5\n0,0\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Interval(0.5, 1.5));
  CHECK(s[1] == Interval(0, 0));
}

TEST_CASE("comments, blank lines and CRLF are tolerated") {
  const Sample s = parse("# produced by hand\r\n\r\ninf,sup\r\n# a row comment\r\n1,2\r\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0] == Interval(1, 2));
}

TEST_CASE("header must match exactly") {
  CHECK_THROWS_AS(parse("lo,hi\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse("inf, sup\n1,2\n"), ParseError);
  try {
    parse("# c\nlo,hi\n1,2\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("malformed rows carry their line number") {
  try {
    parse("inf,sup\n1,2\n3,2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  CHECK_THROWS_AS(parse("mid,spr\n1,-0.5\n"), ParseError);   // negative spread
  CHECK_THROWS_AS(parse("inf,sup\n1\n"), ParseError);        // one field
  CHECK_THROWS_AS(parse("inf,sup\n1,2,3\n"), ParseError);    // three fields
  CHECK_THROWS_AS(parse("inf,sup\nab,2\n"), ParseError);     // not a number
  CHECK_THROWS_AS(parse("inf,sup\nnan,2\n"), ParseError);    // non-finite
  CHECK_THROWS_AS(parse("inf,sup\n1,inf\n"), ParseError);    // non-finite
}

TEST_CASE("empty datasets are rejected") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("inf,sup\n"), InvalidInput);
  CHECK_THROWS_AS(parse("# only comments\n"), ParseError);
}

TEST_CASE("write emits shortest round-trip decimals") {
  const Sample s(std::vector<Interval>{Interval(0.1, 0.3)});
  std::ostringstream out;
  write_dataset(out, s, DatasetFormat::inf_sup);
  CHECK(out.str() == "inf,sup\n0.1,0.3\n");
}

TEST_CASE("mid,spr and inf,sup renderings agree after re-reading") {
  RandomStream rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Sample s = testutil::random_sample(rng, 6, -100, 100);

    std::ostringstream as_endpoints, as_midspr;
    write_dataset(as_endpoints, s, DatasetFormat::inf_sup);
    write_dataset(as_midspr, s, DatasetFormat::mid_spr);
    std::istringstream in1(as_endpoints.str()), in2(as_midspr.str());
    const Sample round1 = parse_dataset(in1);
    const Sample round2 = parse_dataset(in2);

    REQUIRE(round1.size() == s.size());
    REQUIRE(round2.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(round1[i] == s[i]);  // endpoint decimals are exact
      const double scale =
          std::fabs(s[i].inf()) + std::fabs(s[i].sup()) + 1.0;
      const double tol = 2.0 * std::numeric_limits<double>::epsilon() * scale;
      CHECK(std::fabs(round2[i].inf() - s[i].inf()) <= tol);
      CHECK(std::fabs(round2[i].sup() - s[i].sup()) <= tol);
    }
  }
}

TEST_CASE("dyadic data survive the mid,spr rendering exactly") {
  const Sample s(std::vector<Interval>{Interval(1, 2), Interval(-0.5, 3.25)});
  std::ostringstream out;
  write_dataset(out, s, DatasetFormat::mid_spr);
  std::istringstream in(out.str());
  const Sample back = parse_dataset(in);
  CHECK(back[0] == s[0]);
  CHECK(back[1] == s[1]);
}
