#pragma once

#include "m1n/divisor_class.hpp"

#include <string>
#include <vector>

namespace m1n {

// Divisor classes on the quotient of the n-pointed space by the symmetric
// group, in the boundary basis delta~_irr, delta~_{0;2}, ..., delta~_{0;n}.
// The normalization sends 12*lambda (= delta_irr) to 1 * delta~_irr.
struct SymDivisorClass {
    int n = 2;
    Rat a_irr;
    std::vector<Rat> b; // b[k-2] is the coefficient of delta~_{0;k}, k = 2..n

    static SymDivisorClass make(int n, Rat a_irr, std::vector<Rat> b);
    const Rat& bk(int k) const { return b[static_cast<size_t>(k) - 2]; }

    bool operator==(const SymDivisorClass&) const = default;
    std::string str() const;
};

// A curve class on the quotient, as its pairing table against the same basis.
struct SymCurveClass {
    int n = 2;
    std::string name;
    Rat irr_pairing;
    std::vector<Rat> b_pairings; // against delta~_{0;k}, k = 2..n

    const Rat& bk(int k) const { return b_pairings[static_cast<size_t>(k) - 2]; }
};

Rat sym_pairing(const SymCurveClass& c, const SymDivisorClass& d);

// Maps an S_n-invariant class downstairs: a_irr = lambda/12 and b_k the
// common coefficient of the size-k subsets. Throws errc::not_symmetric if
// some size class has unequal coefficients.
SymDivisorClass symmetrize(const DivisorClass& d);

// Membership in the cone spanned by the boundary divisors: the generators
// are the basis, so this is coordinatewise nonnegativity.
bool in_boundary_cone(const SymDivisorClass& d);

// The moving-curve classes whose nonnegative pairings pin every irreducible
// non-boundary effective class into the boundary cone. For genus one:
//   C   : delta~_{0;2} -> n-1, everything else 0
//   C_j : delta~_{0;j} -> -(n-j), delta~_{0;j+1} -> n-j   (2 <= j <= n-1)
//   C_n : delta~_irr -> 12, delta~_{0;n} -> -1.
// For genus g != 1 only the chain curves survive, with
// delta~_{0;j} -> -(2g-2+(n-j)).
std::vector<SymCurveClass> certificate_curves(int n, long long g = 1);

struct SymPairingItem {
    std::string curve;
    Rat value;
    bool nonnegative;
};

struct SymChainItem {
    std::string constraint;
    bool holds;
};

struct SymConstraintsReport {
    int n;
    long long g;
    std::vector<SymPairingItem> pairings;
    bool all_nonnegative;
    std::vector<SymChainItem> chain; // only populated for g = 1
    std::string caveat;
};

// Pairs d against every certificate curve; for g = 1 also reports the
// implied coefficient chain b_2 >= 0, b_{j+1} >= b_j, 12 a_irr >= b_n.
// The constraints apply to irreducible effective divisors other than the
// boundary divisors themselves; the report carries that caveat.
SymConstraintsReport nonboundary_constraints_check(const SymDivisorClass& d, long long g = 1);

} // namespace m1n
