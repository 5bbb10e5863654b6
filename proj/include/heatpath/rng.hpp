// Copyright 2026 The Heatpath Authors
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

#ifndef HEATPATH_RNG_HPP_
#define HEATPATH_RNG_HPP_

#include <cstdint>
#include <random>

namespace heatpath {

// Reproducible random source.
//
// Algorithm identity: MT19937-64 (the 64-bit Mersenne Twister with the
// standard parameters, i.e. std::mt19937_64) seeded directly with the 64-bit
// seed. Its output sequence is fixed by the C++ standard. Derived values use
// only raw 64-bit draws so they are portable across standard libraries and
// languages:
//   - uniform01(): (draw >> 11) * 2^-53, a double in [0, 1);
//   - below(b):    rejection sampling, draws >= (2^64 - 2^64 mod b) are
//                  discarded, result = draw mod b.
// std:: distributions are never used; their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // 2^64 mod bound, computed without overflow.
    const std::uint64_t rem = (0 - bound) % bound;
    const std::uint64_t limit = 0 - rem;  // 2^64 - rem, wraps to 0 when rem == 0
    while (true) {
      const std::uint64_t x = next_u64();
      if (rem == 0 || x < limit) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; combines a base seed with a stream index so that
// independent sub-streams (per map, per round) stay reproducible.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace heatpath

#endif  // HEATPATH_RNG_HPP_
