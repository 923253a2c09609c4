#pragma once

#include "m1n/rational.hpp"

#include <optional>
#include <vector>

namespace m1n {

// Eigenvalue data of an automorphism of order k acting on the deformation
// space: eigenvalues e^{2 pi i k_j / k} recorded by their exponents.
struct AgeProfile {
    long long k = 2;
    std::vector<int> exps;

    // Validates k >= 2, a nonempty list and 0 <= k_j < k.
    static AgeProfile make(long long k, std::vector<int> exps);

    bool operator==(const AgeProfile&) const = default;
};

// age = sum k_j / k, exact.
Rat age(const AgeProfile& p);

// Shape criterion: exactly one exponent nonzero. Whether the nontrivial
// eigenvalue is a primitive k-th root is not decidable from exponents alone;
// see ambiguous_quasi_reflection.
bool is_quasi_reflection(const AgeProfile& p);

// True when the single nonzero exponent e has gcd(e, k) > 1: the profile has
// quasi-reflection shape but its age e/k differs from 1/k, so it is flagged
// rather than silently classified.
bool ambiguous_quasi_reflection(const AgeProfile& p);

struct ProfileAssessment {
    AgeProfile profile;
    Rat age;
    bool quasi_reflection;
    bool ambiguous;
};

struct ReidTaiReport {
    std::vector<ProfileAssessment> profiles;
    std::optional<Rat> min_age; // over non-quasi-reflection profiles
    bool extends;               // every non-quasi-reflection profile has age >= 1
};

// Reid-Tai criterion on a list of profiles: quasi-reflections are excluded
// (the caller is expected to work modulo the subgroup they generate) and a
// canonical form extends iff every remaining age is at least 1.
ReidTaiReport reid_tai_check(const std::vector<AgeProfile>& profiles);

} // namespace m1n
