#pragma once

#include "m1n/rational.hpp"

#include <cstdint>

namespace m1n {

// splitmix64: tiny, fully specified, identical on every platform, so seeded
// sweeps produce identical output everywhere.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] (inclusive); modulo bias is irrelevant for tests
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // numerator in [-max_num, max_num], denominator in [1, max_den]
    Rat rational(long long max_num, long long max_den) {
        long long num = range(-max_num, max_num); // draw order is part of the format
        long long den = range(1, max_den);
        return make_rat(num, den);
    }

  private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 20250808ULL;

} // namespace m1n
