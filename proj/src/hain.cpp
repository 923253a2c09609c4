#include "m1n/hain.hpp"

#include <numeric>

namespace m1n {

FamilyData FamilyData::make(int n, long long d_irr,
                            const std::vector<std::pair<std::vector<int>, long long>>& counts) {
    if (n < 1 || n > kMaxLabels) fail(errc::invalid_dimension, "family dimension out of range");
    if (d_irr < 0) fail(errc::bad_input, "d_irr must be nonnegative");
    FamilyData f;
    f.n = n;
    f.d_irr = d_irr;
    for (const auto& [labels, count] : counts) {
        Subset s = subset_from_labels(labels, n);
        if (subset_size(s) < 2) fail(errc::bad_subset, "d_S subsets need at least two labels");
        if (count < 0) fail(errc::bad_input, "d_S counts must be nonnegative");
        if (count > 0) f.d_s[s] += count;
    }
    return f;
}

FamilyInvariants family_invariants(const FamilyData& f, int i, int j) {
    if (i < 1 || i > f.n || j < 1 || j > f.n || i == j)
        fail(errc::invalid_label, "section labels must be distinct and within 1..n");
    FamilyInvariants inv;
    inv.omega_sq = 0;
    inv.sigma_i_dot_sigma_j = 0;
    inv.omega_dot_sigma_i = make_rat(f.d_irr, 12);
    inv.psi_degree_i = inv.omega_dot_sigma_i;
    for (const auto& [s, d] : f.d_s) {
        inv.omega_sq -= make_rat(d);
        if (subset_contains(s, i) && subset_contains(s, j)) inv.sigma_i_dot_sigma_j += make_rat(d);
        if (subset_contains(s, i)) inv.psi_degree_i += make_rat(d);
    }
    return inv;
}

CurveClass family_curve_class(const FamilyData& f) {
    CurveClass c(f.n);
    c.set_lambda_pairing(make_rat(f.d_irr, 12));
    for (const auto& [s, d] : f.d_s) c.set_pairing(s, make_rat(d));
    return c;
}

namespace {

// sum over unordered pairs {i,j} inside S of a_i a_j
long long pair_sum(const Signature& a, Subset s) {
    long long linear = 0, squares = 0;
    for (int lab : subset_labels(s)) {
        long long v = a[lab];
        linear += v;
        squares += v * v;
    }
    return (linear * linear - squares) / 2;
}

} // namespace

DivisorClass hain_class(const Signature& a) {
    const int n = a.n();
    if (n < 2) fail(errc::invalid_dimension, "D_a needs at least two marked points");
    long long sq = 0;
    for (long long v : a.entries()) sq += v * v;
    // zero-sum makes sum a_i^2 even, so the lambda coefficient is integral
    if (sq % 2 != 0) fail(errc::internal, "sum of squares of a zero-sum tuple must be even");
    Rat outer = make_rat(-1 + sq / 2);

    DivisorClass d(n);
    d.set_lambda(outer);
    Subset all = full_set(n);
    d.set_coeff(all, outer);
    for (Subset s = 1; s < all; ++s)
        if (subset_size(s) >= 2) d.set_coeff(s, make_rat(-pair_sum(a, s)));
    return d;
}

Rat grr_degree(const Signature& a, const FamilyData& f) {
    if (a.n() != f.n) fail(errc::dimension_mismatch, "signature and family have different n");
    long long sq = 0;
    for (long long v : a.entries()) sq += v * v;
    // rational products: fiber counts are only bounded by the input
    Rat out = make_rat(-f.d_irr, 12) + make_rat(sq, 24) * make_rat(f.d_irr);
    for (const auto& [s, d] : f.d_s) out -= make_rat(pair_sum(a, s)) * make_rat(d);
    return out;
}

long long eta(long long d) {
    if (d < 1) fail(errc::out_of_range, "eta needs a positive integer");
    long long count = 0;
    for (long long t = 1; t * t <= d; ++t) {
        if (d % t == 0) count += (t * t == d) ? 1 : 2;
    }
    return count;
}

long long sigma_fn(long long t) {
    if (t < 1) fail(errc::out_of_range, "sigma needs a positive integer");
    if (t > 1'000'000'000) fail(errc::out_of_range, "sigma argument capped at 10^9");
    if (t == 1) return 1;
    long long result = t * t;
    long long rest = t;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        if (result % (p * p) != 0) fail(errc::internal, "sigma lost integrality");
        result = result / (p * p) * (p * p - 1);
    }
    if (rest > 1) {
        if (result % (rest * rest) != 0) fail(errc::internal, "sigma lost integrality");
        result = result / (rest * rest) * (rest * rest - 1);
    }
    return result;
}

long long component_count(const Signature& a) {
    Signature core = a.all_nonzero() ? a : a.stripped();
    if (core.n() < 2) fail(errc::degenerate_signature, "fewer than two nonzero entries");
    if (core.n() == 2) {
        long long v = std::abs(core[1]); // core is (v,-v)
        return v == 1 ? 0 : eta(v) - 1;
    }
    return eta(core.gcd());
}

DivisorClass component_class(const Signature& a) {
    if (a.n() == 2) fail(errc::unsupported_for_n2, "component classes are only computed for n >= 3");
    if (!a.all_nonzero()) fail(errc::drop_zeros_first, "strip zero entries before taking component classes");
    long long d = a.gcd();
    if (d == 1) return hain_class(a);

    Rat factor(1);
    long long rest = d;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        factor *= make_rat(p * p - 1, p * p);
    }
    if (rest > 1) factor *= make_rat(rest * rest - 1, rest * rest);

    DivisorClass out = hain_class(a);
    out.set_lambda(out.lambda() + 1);
    out.add_coeff(full_set(a.n()), Rat(1));
    out *= factor;
    return out;
}

std::vector<std::pair<long long, DivisorClass>> decompose(const Signature& a) {
    if (a.n() == 2) fail(errc::unsupported_for_n2, "component classes are only computed for n >= 3");
    if (!a.all_nonzero()) fail(errc::drop_zeros_first, "strip zero entries before decomposing");
    long long d = a.gcd();
    std::vector<long long> base(a.entries());
    for (long long& v : base) v /= d;

    std::vector<std::pair<long long, DivisorClass>> parts;
    for (long long t = 1; t <= d; ++t) {
        if (d % t != 0) continue;
        std::vector<long long> scaled(base);
        for (long long& v : scaled) v *= t;
        parts.emplace_back(t, component_class(Signature(std::move(scaled))));
    }
    return parts;
}

} // namespace m1n
