#pragma once

#include "m1n/divisor_class.hpp"
#include "m1n/hain.hpp"
#include "m1n/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace m1n {

// A geometric fact the checker consumes but does not verify: the tag names
// the fact, the citation records why the caller believes it.
struct AssertedFact {
    std::string tag;
    std::string citation;

    bool operator==(const AssertedFact&) const = default;
};

inline constexpr const char* kIrreducibleTag = "irreducible-divisor";
inline constexpr const char* kMovingTag = "moving-curve";

// Outcome of an extremality/rigidity check: a moving curve inside an
// irreducible effective divisor with negative self-pairing certifies both.
// The arithmetic (the pairing) is computed; the geometric inputs are carried
// as assertions so consumers can audit what was assumed versus derived.
struct CertificateReport {
    Rat pairing;
    DivisorClass divisor;
    CurveClass curve;
    std::vector<AssertedFact> assumptions;
    bool valid = false; // pairing < 0 and both required facts present

    bool has_fact(const std::string& tag) const;
};

// The curve swept out on the 3-pointed space by varying two marked points on
// a fixed genus-one curve subject to a_1 p_1 + a_2 p_2 + a_3 p_3 = 0:
// lambda pairing 0, delta_{0;{i,j}} pairing a_k^2 - 1, delta_{0;{1,2,3}}
// pairing 1. Requires n = 3 and all entries nonzero (a zero entry collapses
// the family onto a boundary divisor).
CurveClass moving_test_curve(const Signature& a);

// Computes pairing(c, d); the verdict is valid iff the pairing is negative
// and both the irreducibility and moving-curve facts were supplied.
CertificateReport certify_extremal(const DivisorClass& d, const CurveClass& c,
                                   std::optional<AssertedFact> irreducible,
                                   std::optional<AssertedFact> moving);

struct RayFamily {
    Signature signature;  // (k+1, -k, -1)
    DivisorClass hain;    // its divisor class; equals k(k+1) * ray
    DivisorClass ray;     // lambda + d123 + d12 + (1/k) d13 - (1/(k+1)) d23
};

// The k-th member of the infinite extremal-ray family on the 3-pointed space.
RayFamily extremal_ray_family(long long k);

// Default citation texts used by the CLI when certifying Hain divisors.
AssertedFact default_irreducibility_fact(const Signature& a);
AssertedFact default_moving_fact(const Signature& a);

} // namespace m1n
