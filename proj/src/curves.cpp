#include "m1n/curves.hpp"

namespace m1n {

bool CertificateReport::has_fact(const std::string& tag) const {
    for (const auto& f : assumptions)
        if (f.tag == tag) return true;
    return false;
}

CurveClass moving_test_curve(const Signature& a) {
    if (a.n() != 3) fail(errc::invalid_dimension, "the test curve lives on the 3-pointed space");
    if (!a.all_nonzero())
        fail(errc::zero_entry, "a zero entry degenerates the family onto a boundary divisor");
    CurveClass x(3);
    x.set_lambda_pairing(Rat(0)); // X.delta_irr = 0
    // X.delta_{0;{i,j}} = a_k^2 - 1 for the complementary label k
    for (int k = 1; k <= 3; ++k) {
        Subset s = full_set(3) & ~singleton(k);
        x.set_pairing(s, make_rat(a[k] * a[k] - 1));
    }
    x.set_pairing(full_set(3), Rat(1));
    return x;
}

CertificateReport certify_extremal(const DivisorClass& d, const CurveClass& c,
                                   std::optional<AssertedFact> irreducible,
                                   std::optional<AssertedFact> moving) {
    if (c.n() != d.n()) fail(errc::dimension_mismatch, "curve and divisor live on different spaces");
    CertificateReport report{pairing(c, d), d, c, {}, false};
    if (irreducible) report.assumptions.push_back(std::move(*irreducible));
    if (moving) report.assumptions.push_back(std::move(*moving));
    report.valid =
        report.pairing < 0 && report.has_fact(kIrreducibleTag) && report.has_fact(kMovingTag);
    return report;
}

RayFamily extremal_ray_family(long long k) {
    if (k < 1) fail(errc::out_of_range, "ray index must be positive");
    Signature sig({k + 1, -k, -1});
    DivisorClass ray(3);
    ray.set_lambda(Rat(1));
    ray.set_coeff(subset_from_labels({1, 2}, 3), Rat(1));
    ray.set_coeff(subset_from_labels({1, 3}, 3), make_rat(1, k));
    ray.set_coeff(subset_from_labels({2, 3}, 3), make_rat(-1, k + 1));
    ray.set_coeff(full_set(3), Rat(1));
    return RayFamily{sig, hain_class(sig), std::move(ray)};
}

AssertedFact default_irreducibility_fact(const Signature& a) {
    return {kIrreducibleTag,
            "D_" + a.str() +
                " is irreducible: gcd of the entries is 1, so the torsion monodromy acts "
                "transitively on the defining locus"};
}

AssertedFact default_moving_fact(const Signature& a) {
    return {kMovingTag,
            "the family sweeping two marked points over a fixed genus-one curve covers a dense "
            "subset of D_" + a.str() + " as the curve varies"};
}

} // namespace m1n
