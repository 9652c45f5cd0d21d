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

#include <cmath>
#include <cstdint>

namespace irobust {

/// Identifier of the generator + sampling recipe. Bump the suffix whenever a
/// change would alter the byte output of a seeded run.
inline constexpr char kRngAlgorithm[] = "splitmix64+boxmuller/v1";

/// SplitMix64 (Steele, Lea & Flood 2014; same constants as Java's
/// SplittableRandom). State advances by the golden-ratio increment, output
/// is the mixed state, so the sequence is effectively counter-based.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// SplitMix64 output function alone, used as a 64-bit hash step.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// A seeded stream of doubles. Substreams are derived by hashing
/// (seed, a, b), so a stream's output depends only on those three values,
/// never on which thread or in which order it is drawn from.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  static RandomStream substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ull);
    h = mix64(h ^ (a + 0x9E3779B97F4A7C15ull));
    h = mix64(h ^ (b + 0x9E3779B97F4A7C15ull));
    return RandomStream(h);
  }

  std::uint64_t next_u64() { return gen_.next(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Box-Muller; the paired draw is cached so consecutive calls consume
  /// alternating amounts of raw output, deterministically per stream.
  double normal(double mean, double stddev) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    // (x >> 11) + 1 maps to (0, 2^53], so u1 > 0 and log(u1) is finite.
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return mean + stddev * (r * std::cos(angle));
  }

private:
  SplitMix64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace irobust
