#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m1n/curves.hpp"

#include "test_util.hpp"

#include <numeric>

using namespace m1n;
using test::curve;
using test::divisor;
using test::sub;
using test::thrown;

TEST_CASE("test curve pairing tables") {
    CHECK(moving_test_curve(Signature({1, 1, -2})) ==
          curve(3, Rat(0), {{{1, 2}, Rat(3)}, {{1, 2, 3}, Rat(1)}}));
    CHECK(moving_test_curve(Signature({2, -1, -1})) ==
          curve(3, Rat(0), {{{2, 3}, Rat(3)}, {{1, 2, 3}, Rat(1)}}));
    CHECK(thrown([] { moving_test_curve(Signature({1, -1, 0})); }) == errc::zero_entry);
    CHECK(thrown([] { moving_test_curve(Signature({1, 1, -1, -1})); }) == errc::invalid_dimension);
}

TEST_CASE("certificates") {
    Signature a({1, 1, -2});
    auto report = certify_extremal(hain_class(a), moving_test_curve(a),
                                   default_irreducibility_fact(a), default_moving_fact(a));
    CHECK(report.pairing == -1);
    CHECK(report.valid);
    CHECK(report.assumptions.size() == 2);

    // positive pairing: not a certificate
    auto bad = certify_extremal(boundary_class(3, sub({1, 2}, 3)), moving_test_curve(a),
                                default_irreducibility_fact(a), default_moving_fact(a));
    CHECK(bad.pairing == 3);
    CHECK(!bad.valid);

    // zero divisor pairs to zero: invalid
    auto zero = certify_extremal(DivisorClass(3), moving_test_curve(a),
                                 default_irreducibility_fact(a), default_moving_fact(a));
    CHECK(zero.pairing == 0);
    CHECK(!zero.valid);

    // a missing assumption blocks the verdict even with negative pairing
    auto unsupported =
        certify_extremal(hain_class(a), moving_test_curve(a), std::nullopt, default_moving_fact(a));
    CHECK(unsupported.pairing == -1);
    CHECK(!unsupported.valid);
}

TEST_CASE("verdict is scale invariant") {
    Signature a({3, -2, -1});
    CurveClass x = moving_test_curve(a);
    DivisorClass d = hain_class(a);
    for (const Rat& scale : {make_rat(1, 7), Rat(2), Rat(100)}) {
        auto report = certify_extremal(scale * d, x, default_irreducibility_fact(a),
                                       default_moving_fact(a));
        CHECK(report.valid);
    }
}

TEST_CASE("extremal ray family") {
    RayFamily f1 = extremal_ray_family(1);
    CHECK(f1.signature == Signature({2, -1, -1}));
    CHECK(f1.hain == Rat(2) * f1.ray);

    RayFamily f2 = extremal_ray_family(2);
    CHECK(f2.hain == Rat(6) * f2.ray);

    CHECK(!proportional(f1.ray, f2.ray));
    CHECK(thrown([] { extremal_ray_family(0); }) == errc::out_of_range);
}

TEST_CASE("X . D_a = -1 on primitive triples") {
    for (long long a1 = -30; a1 <= 30; ++a1) {
        for (long long a2 = -30; a2 <= 30; ++a2) {
            long long a3 = -a1 - a2;
            if (a1 == 0 || a2 == 0 || a3 == 0 || std::abs(a3) > 30) continue;
            if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
            Signature a({a1, a2, a3});
            REQUIRE(pairing(moving_test_curve(a), hain_class(a)) == -1);
        }
    }
}

TEST_CASE("rays are pairwise non-proportional") {
    std::vector<DivisorClass> rays;
    for (long long k = 1; k <= 50; ++k) {
        RayFamily fam = extremal_ray_family(k);
        CHECK(fam.hain == make_rat(k * (k + 1)) * fam.ray);
        rays.push_back(fam.ray);
    }
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j) REQUIRE(!proportional(rays[i], rays[j]));
}
