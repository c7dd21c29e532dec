/* Copyright 2026 The TrackStab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstdint>
#include <limits>

#include "trackstab/error.hpp"

namespace trackstab {

/// PCG-XSH-RR 64/32 (O'Neill's PCG32) with a fixed stream increment.
///
/// The synthetic generator and all seeded tests depend on this producing the
/// same sequence on every platform and compiler, which the standard library
/// distributions do not guarantee. Algorithm: 64-bit LCC state advance
/// (multiplier 6364136223846793005), output = 32-bit xorshift-high followed
/// by a random rotation taken from the top state bits.
class Pcg32 {
 public:
  explicit Pcg32(std::uint64_t seed) {
    state_ = 0u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ull + kIncrement;
    const auto xorshifted =
        static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  /// Unbiased integer in [0, bound) by rejection sampling. bound > 0.
  std::uint32_t next_below(std::uint32_t bound) {
    const std::uint32_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double next_double() {
    const std::uint32_t hi = next_u32() >> 5;   // 27 bits
    const std::uint32_t lo = next_u32() >> 6;   // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) /
           9007199254740992.0;  // 2^53
  }

  /// Uniform integer in the inclusive range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ConfigError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    if (span > std::numeric_limits<std::uint32_t>::max())
      throw ConfigError("uniform_int: range too wide");
    return lo + static_cast<std::int64_t>(
                    next_below(static_cast<std::uint32_t>(span)));
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  // Default PCG stream; any odd constant works, all call sites share this one.
  static constexpr std::uint64_t kIncrement = 1442695040888963407ull;

  std::uint64_t state_ = 0;
};

}  // namespace trackstab
