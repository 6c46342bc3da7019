// Copyright 2026 The vqft Authors
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

#ifndef VQFT_RNG_HPP
#define VQFT_RNG_HPP

#include <cstdint>

namespace vqft {

/// Splittable counter-based random stream (splitmix64 core). Streams are
/// keyed by (seed, stream id), so e.g. random input state #k of an
/// experiment is reproducible independently of evaluation order. The
/// uniform mapping is fixed here rather than delegated to <random>
/// distributions, whose output is implementation-defined.
class SplitStream {
 public:
  SplitStream(uint64_t seed, uint64_t stream)
      : state_(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform angle in [0, 2*pi).
  double next_angle() { return next_uniform() * 6.283185307179586476925286766559; }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  uint64_t state_;
};

}  // namespace vqft

#endif  // VQFT_RNG_HPP
