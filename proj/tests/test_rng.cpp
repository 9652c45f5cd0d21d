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

#include "doctest.h"
#include "irobust/rng.hpp"

using namespace irobust;

TEST_CASE("streams with the same seed are identical") {
  RandomStream a(123456789);
  RandomStream b(123456789);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("substreams depend only on (seed, a, b)") {
  RandomStream s1 = RandomStream::substream(42, 100, 7);
  RandomStream s2 = RandomStream::substream(42, 100, 7);
  RandomStream other_rep = RandomStream::substream(42, 100, 8);
  RandomStream other_n = RandomStream::substream(42, 101, 7);
  RandomStream other_seed = RandomStream::substream(43, 100, 7);

  const std::uint64_t v = s1.next_u64();
  CHECK(v == s2.next_u64());
  CHECK(v != other_rep.next_u64());
  CHECK(v != other_n.next_u64());
  CHECK(v != other_seed.next_u64());
}

TEST_CASE("uniform01 range and rough mean") {
  RandomStream rng(31);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(std::fabs(sum / n - 0.5) < 0.01);
}

TEST_CASE("normal sampler moments") {
  RandomStream rng(32);
  double sum = 0.0, sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal(0.0, 1.0);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.02);
  CHECK(std::fabs(var - 1.0) < 0.03);
}
