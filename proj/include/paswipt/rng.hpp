// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: deterministic random-number helpers.
#pragma once

#include <cstdint>
#include <random>

namespace paswipt {

// Uniform draw on [0, 1) from the top 53 bits of the engine output.  Pinned
// here (rather than via std::uniform_real_distribution) so that documented
// random streams are reproducible across standard libraries.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// SplitMix64 finalizer, used to derive independent child seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t h = mix64(base);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

}  // namespace paswipt
