#include "m1n/forgetful.hpp"

#include <cstdlib>
#include <numeric>

namespace m1n {

std::vector<int> inclusion_keep(int m) {
    std::vector<int> keep(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) keep[static_cast<size_t>(i)] = i + 1;
    return keep;
}

DivisorClass pullback(const DivisorClass& d, int n, const std::vector<int>& keep) {
    const int m = d.n();
    if (n < m || n > kMaxLabels)
        fail(errc::invalid_dimension, "target space must have at least as many points as the source");
    if (static_cast<int>(keep.size()) != m)
        fail(errc::dimension_mismatch, "keep map must list one target label per source label");
    Subset image = subset_from_labels(keep, n); // validates range and injectivity

    DivisorClass out(n);
    out.set_lambda(d.lambda());
    const Subset forgotten = full_set(n) & ~image;
    for (const auto& [t, c] : d.boundary()) {
        Subset base = 0;
        for (int lab : subset_labels(t)) base |= singleton(keep[static_cast<size_t>(lab) - 1]);
        // S = keep(T) plus any subset of the forgotten labels
        Subset u = forgotten;
        while (true) {
            out.add_coeff(base | u, c);
            if (u == 0) break;
            u = (u - 1) & forgotten;
        }
    }
    return out;
}

DivisorClass pulled_back_hain_triple(int n, long long a1, long long a2) {
    if (n < 3 || n > kMaxLabels) fail(errc::invalid_dimension, "pulled-back triples need n >= 3");
    if (std::abs(a1) > Signature::kMaxEntry || std::abs(a2) > Signature::kMaxEntry)
        fail(errc::out_of_range, "triple entries are capped at |a_i| <= " + std::to_string(Signature::kMaxEntry));
    const Rat outer = make_rat(-1 + a1 * a1 + a2 * a2 + a1 * a2);
    const Rat c12 = make_rat(-a1 * a2);
    const Rat c13 = make_rat(a1 * (a1 + a2));
    const Rat c23 = make_rat(a2 * (a1 + a2));

    DivisorClass out(n);
    out.set_lambda(outer);
    const Subset all = full_set(n);
    for (Subset s = 1; s <= all; ++s) {
        if (subset_size(s) < 2) continue;
        const bool has1 = subset_contains(s, 1), has2 = subset_contains(s, 2), has3 = subset_contains(s, 3);
        if (has1 && has2 && has3)
            out.set_coeff(s, outer);
        else if (has1 && has2)
            out.set_coeff(s, c12);
        else if (has1 && has3)
            out.set_coeff(s, c13);
        else if (has2 && has3)
            out.set_coeff(s, c23);
    }
    return out;
}

CertificateReport pulled_back_certificate(int n, long long a1, long long a2) {
    if (n < 3 || n > kMaxLabels) fail(errc::invalid_dimension, "pulled-back certificates need n >= 3");
    if (std::gcd(a1, a2) != 1)
        fail(errc::not_primitive, "(a1, a2) must be coprime for the pullback to be irreducible");
    if (a1 == 0 || a2 == 0 || a1 + a2 == 0)
        fail(errc::zero_entry, "the induced triple must have all entries nonzero");

    Signature triple({a1, a2, -a1 - a2});
    CurveClass x = moving_test_curve(triple);
    // The pairing is computed on the 3-pointed base; the projection formula
    // transports it to the lifted curve against the pulled-back divisor.
    Rat base_pairing = pairing(x, hain_class(triple));

    CertificateReport report{base_pairing, pulled_back_hain_triple(n, a1, a2), x, {}, false};
    report.assumptions.push_back(
        {kIrreducibleTag, "the pullback of D_" + triple.str() +
                              " along the forgetful map is irreducible: the triple is primitive and "
                              "the general fiber of the forgetful map is irreducible"});
    report.assumptions.push_back(
        {kMovingTag, "the test curve lifts to a moving curve in the pulled-back divisor; its "
                     "pairing equals the base pairing by the projection formula"});
    report.valid = report.pairing < 0;
    return report;
}

} // namespace m1n
