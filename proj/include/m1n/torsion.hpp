#pragma once

#include "m1n/error.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace m1n {

// Brute-force lab over the square torus (Z/N)^2: exact-order counting and
// the orbit structure of the monodromy shears. Everything here is an oracle
// for the arithmetic elsewhere, so it enumerates rather than computes.

inline constexpr long long kTorsionCap = 1000; // points tables are O(N^2)

// Number of points of (Z/N)^2 whose exact additive order is t (t | N).
// The order of each point is found by repeated addition.
long long exact_order_count(long long t, long long N);

struct MonodromyOrbit {
    long long invariant;                 // gcd(x, y, a) shared by the orbit
    long long size;
    std::pair<long long, long long> representative; // lexicographically least member
};

// Orbits of the group generated by (x,y) -> (x+y,y) and (x,y) -> (x,x+y)
// on (Z/a)^2, by breadth-first closure. Sorted by decreasing invariant.
// Only the two shears are used as generators, so the orbit structure is
// computed, not assumed transitive on gcd strata.
std::vector<MonodromyOrbit> monodromy_orbits(long long a);

// gcd(x, y, a), with gcd(0,0,a) = a.
long long orbit_invariant(long long x, long long y, long long a);

} // namespace m1n
