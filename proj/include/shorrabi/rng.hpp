// Copyright 2026 The shorrabi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace shorrabi {

/// Stateless counter-based random numbers: every (seed, stream, step, lane)
/// tuple maps to its own uniform draw, so results do not depend on the order
/// in which trajectories, steps or qubits are visited.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t bits(uint64_t stream, uint64_t step, uint64_t lane) const {
    uint64_t h = mix(seed_ ^ 0x6a09e667f3bcc909ULL);
    h = mix(h ^ stream);
    h = mix(h ^ (step * 0x9e3779b97f4a7c15ULL));
    return mix(h ^ (lane + 0xbb67ae8584caa73bULL));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform(uint64_t stream, uint64_t step, uint64_t lane) const {
    return static_cast<double>(bits(stream, step, lane) >> 11) * 0x1.0p-53;
  }

  uint64_t seed() const { return seed_; }

 private:
  // splitmix64 finalizer
  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
};

}  // namespace shorrabi
