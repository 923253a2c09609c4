#pragma once

#include "m1n/error.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace m1n {

// Marked-point labels are 1..n. Subsets of labels are bitmasks: bit (i-1)
// set means label i is in the set. n is capped so dense iteration over all
// 2^n - n - 1 boundary subsets stays feasible at small n while sparse maps
// carry the large-n certificate classes.
using Subset = std::uint32_t;

inline constexpr int kMaxLabels = 24;

inline int subset_size(Subset s) { return std::popcount(s); }

inline bool subset_contains(Subset s, int label) { return (s >> (label - 1)) & 1u; }

inline Subset singleton(int label) { return Subset{1} << (label - 1); }

inline Subset full_set(int n) { return (Subset{1} << n) - 1u; }

inline bool subset_in_range(Subset s, int n) { return (s & ~full_set(n)) == 0; }

std::vector<int> subset_labels(Subset s);

// Builds a subset from 1-based labels, validating range and duplicates.
Subset subset_from_labels(const std::vector<int>& labels, int n);

// Canonical order used everywhere classes are stored or printed:
// by size first, then lexicographically on the sorted label list.
// For equal sizes the lexicographically smaller set is the one containing
// the smallest label at which the two sets differ.
inline bool subset_less(Subset a, Subset b) {
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb) return sa < sb;
    if (a == b) return false;
    Subset diff = a ^ b;
    Subset low = diff & (~diff + 1u);
    return (a & low) != 0;
}

struct SubsetOrder {
    bool operator()(Subset a, Subset b) const { return subset_less(a, b); }
};

// "{1,2,3}"
std::string subset_str(Subset s);

} // namespace m1n
