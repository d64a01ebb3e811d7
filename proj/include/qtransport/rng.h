// Copyright 2026 The qtransport Authors
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

#ifndef QTRANSPORT_RNG_H
#define QTRANSPORT_RNG_H

#include <cstdint>
#include <limits>

namespace qtransport {

/// Splitmix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Cheap independent random stream keyed by (seed, stream index).
///
/// Every shot or particle history draws from its own stream, so tallies are
/// bit-identical for any partitioning of the work across threads. Satisfies
/// UniformRandomBitGenerator.
class Rng {
   public:
    using result_type = std::uint64_t;

    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix64(seed + 0x632be59bd9b4e019ULL) ^ mix64(stream * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform_positive() { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }

   private:
    std::uint64_t state_;
};

/// Derives a child seed, e.g. one per Grover power or per experiment seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x2545f4914f6cdd1dULL));
}

}  // namespace qtransport

#endif
