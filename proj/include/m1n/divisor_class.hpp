#pragma once

#include "m1n/labels.hpp"
#include "m1n/permutation.hpp"
#include "m1n/rational.hpp"

#include <map>
#include <string>

namespace m1n {

// A divisor class on the moduli space of stable n-pointed genus-one curves,
// written in the basis {lambda} u {delta_{0;S} : S subset of {1..n}, |S| >= 2}.
// delta_irr is not a basis element: it equals 12*lambda and is converted on
// construction. Coefficients are exact rationals; absent subset means 0 and
// zero coefficients are never stored, so equality is map equality.
class DivisorClass {
  public:
    explicit DivisorClass(int n);

    int n() const { return n_; }
    const Rat& lambda() const { return lambda_; }
    void set_lambda(Rat v) { lambda_ = std::move(v); }

    Rat coeff(Subset s) const;
    void set_coeff(Subset s, Rat value);
    void add_coeff(Subset s, const Rat& value);

    const std::map<Subset, Rat, SubsetOrder>& boundary() const { return boundary_; }

    bool is_zero() const { return lambda_ == 0 && boundary_.empty(); }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rat& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& c, DivisorClass d) { return d *= c; }
    DivisorClass operator-() const;

    bool operator==(const DivisorClass&) const = default;

    // "2λ - δ{1,2} + 2δ{1,3} + ...", subsets in canonical order; "0" if zero.
    std::string str() const;

  private:
    void check_subset(Subset s) const;

    int n_;
    Rat lambda_;
    std::map<Subset, Rat, SubsetOrder> boundary_;
};

// A numerical curve class, stored as its pairing table against the same
// basis. The pairing with delta_irr is derived, never stored:
// C.delta_irr = 12 * C.lambda.
class CurveClass {
  public:
    explicit CurveClass(int n);

    int n() const { return n_; }
    const Rat& lambda_pairing() const { return lambda_; }
    void set_lambda_pairing(Rat v) { lambda_ = std::move(v); }
    Rat delta_irr_pairing() const { return Rat(12) * lambda_; }

    Rat pairing_with(Subset s) const;
    void set_pairing(Subset s, Rat value);

    const std::map<Subset, Rat, SubsetOrder>& boundary() const { return boundary_; }

    bool operator==(const CurveClass&) const = default;

    std::string str() const;

  private:
    void check_subset(Subset s) const;

    int n_;
    Rat lambda_;
    std::map<Subset, Rat, SubsetOrder> boundary_;
};

// --- standard classes -------------------------------------------------

// delta_irr = 12*lambda.
DivisorClass delta_irr_class(int n);

// psi_i = lambda + sum of delta_{0;S} over S containing i, |S| >= 2.
DivisorClass psi_class(int n, int i);

// K = (n-11)*lambda + sum (|S|-2) delta_{0;S}.
DivisorClass canonical_class(int n);

// Basis boundary divisor delta_{0;S}.
DivisorClass boundary_class(int n, Subset s);

// --- operations -------------------------------------------------------

// Bilinear intersection pairing over the shared basis.
Rat pairing(const CurveClass& c, const DivisorClass& d);

// The symmetric-group action: lambda is fixed, the coefficient of
// delta_{0;S} moves to delta_{0;p(S)}.
DivisorClass relabel(const Permutation& p, const DivisorClass& d);
CurveClass relabel(const Permutation& p, const CurveClass& c);

// True iff a = r*b for some nonzero rational r (both nonzero), decided by
// cross-multiplication of coefficient vectors.
bool proportional(const DivisorClass& a, const DivisorClass& b);

} // namespace m1n
