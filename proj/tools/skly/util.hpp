// SPDX-License-Identifier: Apache-2.0
#ifndef SKLY_TOOLS_UTIL_HPP
#define SKLY_TOOLS_UTIL_HPP

#include <complex>
#include <cstdint>
#include <string>

#include "skly/errors.hpp"

namespace skly::tool {

// Deterministic generator so --seed pins every randomized report byte-for-byte.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::complex<double> ccomplex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
};

// Parses "1.2i", "0.3+1.1i", "-2", "i", "0.5-0.2i".
std::complex<double> parse_complex(const std::string& text);

std::string format_complex(const std::complex<double>& z);

} // namespace skly::tool

#endif
