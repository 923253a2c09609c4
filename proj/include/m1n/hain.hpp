#pragma once

#include "m1n/divisor_class.hpp"
#include "m1n/signature.hpp"

#include <map>
#include <vector>

namespace m1n {

// Numerical invariants of a one-parameter family of n-pointed genus-one
// curves: d_irr rational nodal fibers and d_S fibers where the sections
// labeled by S come together.
struct FamilyData {
    int n = 1;
    long long d_irr = 0;
    std::map<Subset, long long, SubsetOrder> d_s;

    static FamilyData make(int n, long long d_irr,
                           const std::vector<std::pair<std::vector<int>, long long>>& counts);
};

struct FamilyInvariants {
    Rat omega_sq;            // omega^2 = -sum d_S
    Rat sigma_i_dot_sigma_j; // sum over S containing both i and j of d_S
    Rat omega_dot_sigma_i;   // d_irr / 12
    Rat psi_degree_i;        // B.psi_i = d_irr/12 + sum over S containing i of d_S
};

FamilyInvariants family_invariants(const FamilyData& f, int i, int j);

// The curve class induced by the family: lambda pairing d_irr/12, boundary
// pairings d_S.
CurveClass family_curve_class(const FamilyData& f);

// The class of the divisor D_a of n-pointed genus-one curves with
// sum a_i p_i = 0 in the Jacobian:
//   (-1 + (1/2) sum a_i^2) (lambda + delta_{0;{1..n}})
//   - sum_{2 <= |S| < n} (sum_{{i,j} in S} a_i a_j) delta_{0;S}.
// The formula is applied verbatim for any zero-sum signature, including ones
// with zero entries; see the pullback relation tested in forgetful.
DivisorClass hain_class(const Signature& a);

// Degree of the line bundle cut out by sum a_i sigma_i on the family base:
// -(1/12) d_irr + (1/24)(sum a_i^2) d_irr - sum_S (sum_{{i,j} in S} a_i a_j) d_S.
// Equals B.D_a + d_{1..n} for the induced curve class B.
Rat grr_degree(const Signature& a, const FamilyData& f);

// Number of positive divisors of d.
long long eta(long long d);

// sigma(1) = 1; sigma(t) = t^2 prod_{p | t} (1 - 1/p^2). Always a positive
// integer; a non-integer intermediate would mean broken arithmetic and throws
// errc::internal.
long long sigma_fn(long long t);

// Number of irreducible components of D_a. Zero entries are dropped first
// (the pullback along the forgetful map has the same component count); for
// two remaining entries (a,-a) the count is eta(a) - 1 with the diagonal
// excluded, for three or more it is eta(gcd).
long long component_count(const Signature& a);

// Class of the component D'_a where the points satisfy no proper divisor of
// the defining relation: hain_class(a) for primitive a, otherwise
// prod_{p | d} (1 - 1/p^2) (D_a + lambda + delta_{0;{1..n}}).
// Requires n >= 3 and all entries nonzero.
DivisorClass component_class(const Signature& a);

// D_a = sum over t | gcd of D'_{t b} with b = a/gcd; returns the (t, class)
// list in increasing t. The classes sum to hain_class(a).
std::vector<std::pair<long long, DivisorClass>> decompose(const Signature& a);

} // namespace m1n
