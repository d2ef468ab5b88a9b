// Copyright 2026 The openqfi Authors
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

// splitmix64 with per-sample streams. Every Monte Carlo sample draws from
// its own stream derived from (seed, sample index), so results are
// reproducible across machines and independent of evaluation order.

#ifndef OPENQFI_RNG_HPP
#define OPENQFI_RNG_HPP

#include <cstdint>

namespace openqfi {

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit mantissa.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

// Stream stride differs from the internal splitmix increment so consecutive
// streams never alias each other's sequences.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64{seed + index * 0xD1B54A32D192ED03ull};
}

inline constexpr const char* kPrngName = "splitmix64";

}  // namespace openqfi

#endif  // OPENQFI_RNG_HPP
