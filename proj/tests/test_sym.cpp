#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m1n/hain.hpp"
#include "m1n/prng.hpp"
#include "m1n/sym.hpp"

#include "test_util.hpp"

using namespace m1n;
using test::thrown;

TEST_CASE("symmetrize") {
    SymDivisorClass k4 = symmetrize(canonical_class(4));
    CHECK(k4.a_irr == make_rat(-7, 12));
    CHECK(k4.bk(2) == 0);
    CHECK(k4.bk(3) == 1);
    CHECK(k4.bk(4) == 2);

    SymDivisorClass irr = symmetrize(delta_irr_class(4));
    CHECK(irr.a_irr == 1);
    CHECK(irr.bk(2) == 0);
    CHECK(irr.bk(3) == 0);
    CHECK(irr.bk(4) == 0);

    CHECK(thrown([] { symmetrize(hain_class(Signature({1, 1, -2}))); }) == errc::not_symmetric);
    // partially-zero size class is caught too
    CHECK(thrown([] { symmetrize(psi_class(3, 1)); }) == errc::not_symmetric);
}

TEST_CASE("symmetrize is linear on invariant classes") {
    Prng rng(3);
    for (int round = 0; round < 20; ++round) {
        int n = static_cast<int>(rng.range(2, 7));
        auto random_invariant = [&] {
            DivisorClass d(n);
            d.set_lambda(rng.rational(8, 4));
            for (int k = 2; k <= n; ++k) {
                Rat c = rng.rational(8, 4);
                for (Subset s = 1; s <= full_set(n); ++s)
                    if (subset_size(s) == k) d.set_coeff(s, c);
            }
            return d;
        };
        DivisorClass d1 = random_invariant(), d2 = random_invariant();
        Rat alpha = rng.rational(8, 4), beta = rng.rational(8, 4);
        SymDivisorClass lhs = symmetrize(alpha * d1 + beta * d2);
        SymDivisorClass r1 = symmetrize(d1), r2 = symmetrize(d2);
        CHECK(lhs.a_irr == alpha * r1.a_irr + beta * r2.a_irr);
        for (int k = 2; k <= n; ++k) CHECK(lhs.bk(k) == alpha * r1.bk(k) + beta * r2.bk(k));
    }
}

TEST_CASE("boundary cone membership") {
    CHECK(in_boundary_cone(SymDivisorClass::make(3, Rat(1), {Rat(0), Rat(0)})));
    CHECK(!in_boundary_cone(SymDivisorClass::make(3, Rat(0), {Rat(-1), Rat(0)})));
    CHECK(!in_boundary_cone(symmetrize(canonical_class(4))));
}

TEST_CASE("certificate curves at n = 3") {
    auto curves = certificate_curves(3, 1);
    REQUIRE(curves.size() == 3);
    CHECK(curves[0].name == "C");
    CHECK(curves[0].irr_pairing == 0);
    CHECK(curves[0].bk(2) == 2);
    CHECK(curves[0].bk(3) == 0);
    CHECK(curves[1].name == "C_2");
    CHECK(curves[1].irr_pairing == 0);
    CHECK(curves[1].bk(2) == -1);
    CHECK(curves[1].bk(3) == 1);
    CHECK(curves[2].name == "C_3");
    CHECK(curves[2].irr_pairing == 12);
    CHECK(curves[2].bk(2) == 0);
    CHECK(curves[2].bk(3) == -1);
}

TEST_CASE("certificate curves, degenerate and higher genus") {
    auto curves2 = certificate_curves(2, 1);
    REQUIRE(curves2.size() == 2);
    CHECK(curves2[0].name == "C");
    CHECK(curves2[0].bk(2) == 1);
    CHECK(curves2[1].name == "C_2");
    CHECK(curves2[1].irr_pairing == 12);
    CHECK(curves2[1].bk(2) == -1);

    auto genus2 = certificate_curves(4, 2);
    REQUIRE(genus2.size() == 2); // C_2, C_3 only
    CHECK(genus2[0].name == "C_2");
    CHECK(genus2[0].bk(2) == -4);
    CHECK(genus2[0].bk(3) == 2);
    CHECK(genus2[0].bk(4) == 0);

    // each C_j pairs to zero against delta~_irr and all k outside {j, j+1}
    for (int n = 3; n <= 8; ++n) {
        auto curves = certificate_curves(n, 1);
        for (int j = 2; j <= n - 1; ++j) {
            const auto& cj = curves[static_cast<size_t>(j) - 1];
            CHECK(cj.irr_pairing == 0);
            for (int k = 2; k <= n; ++k)
                if (k != j && k != j + 1) CHECK(cj.bk(k) == 0);
        }
    }
}

TEST_CASE("constraint reports") {
    // boundary divisor delta~_{0;2} at n = 3: C >= 0 but C_2 < 0, correctly flagged
    SymDivisorClass d2 = SymDivisorClass::make(3, Rat(0), {Rat(1), Rat(0)});
    auto report = nonboundary_constraints_check(d2, 1);
    CHECK(report.pairings[0].value == 2);
    CHECK(report.pairings[0].nonnegative);
    CHECK(report.pairings[1].value == -1);
    CHECK(!report.pairings[1].nonnegative);
    CHECK(!report.all_nonnegative);
    CHECK(!report.caveat.empty());

    auto pass = nonboundary_constraints_check(SymDivisorClass::make(3, Rat(1), {Rat(1), Rat(2)}), 1);
    CHECK(pass.all_nonnegative);
    for (const auto& item : pass.chain) CHECK(item.holds);

    auto fail_chain = nonboundary_constraints_check(SymDivisorClass::make(3, Rat(0), {Rat(0), Rat(1)}), 1);
    CHECK(!fail_chain.all_nonnegative);
    CHECK(fail_chain.chain.back().constraint == "12 a_irr >= b_3");
    CHECK(!fail_chain.chain.back().holds);
}

TEST_CASE("passing the constraints implies the boundary cone") {
    Prng rng(17);
    int passing = 0;
    for (int round = 0; round < 4000; ++round) {
        int n = static_cast<int>(rng.range(3, 8));
        std::vector<Rat> b(static_cast<size_t>(n - 1));
        Rat a_irr;
        if (round % 2 == 0) {
            a_irr = rng.rational(10, 4);
            for (auto& v : b) v = rng.rational(10, 4);
        } else {
            b[0] = rng.rational(4, 3) + 1;
            for (size_t k = 1; k < b.size(); ++k) b[k] = b[k - 1] + rng.rational(2, 3) + make_rat(1, 2);
            a_irr = (b.back() + rng.rational(3, 2) + 1) / 12;
        }
        SymDivisorClass d = SymDivisorClass::make(n, a_irr, b);
        if (nonboundary_constraints_check(d, 1).all_nonnegative) {
            ++passing;
            REQUIRE(in_boundary_cone(d));
        }
    }
    CHECK(passing > 0);
}
