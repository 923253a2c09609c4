#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m1n/curves.hpp"
#include "m1n/divisor_class.hpp"
#include "m1n/hain.hpp"
#include "m1n/prng.hpp"

#include "test_util.hpp"

using namespace m1n;
using test::divisor;
using test::sub;
using test::thrown;

TEST_CASE("delta_irr is 12 lambda") {
    CHECK(delta_irr_class(3) == divisor(3, Rat(12), {}));
    CHECK(delta_irr_class(1) == divisor(1, Rat(12), {}));
    CHECK(thrown([] { delta_irr_class(0); }) == errc::invalid_dimension);

    // pairs to zero against the 3-point test curve
    CHECK(pairing(moving_test_curve(Signature({1, 1, -2})), delta_irr_class(3)) == 0);

    DivisorClass pure_lambda(5);
    pure_lambda.set_lambda(Rat(1));
    CHECK(delta_irr_class(5) == Rat(12) * pure_lambda);
}

TEST_CASE("psi classes") {
    CHECK(psi_class(2, 1) == divisor(2, Rat(1), {{{1, 2}, Rat(1)}}));
    CHECK(psi_class(3, 2) ==
          divisor(3, Rat(1), {{{1, 2}, Rat(1)}, {{2, 3}, Rat(1)}, {{1, 2, 3}, Rat(1)}}));
    CHECK(thrown([] { psi_class(3, 4); }) == errc::invalid_label);
    CHECK(thrown([] { psi_class(3, 0); }) == errc::invalid_label);

    // relabeling symmetry
    CHECK(psi_class(3, 1) == relabel(Permutation::transposition(3, 1, 2), psi_class(3, 2)));
}

TEST_CASE("psi support is exactly the subsets through i") {
    for (int n = 2; n <= 12; ++n) {
        for (int i = 1; i <= n; ++i) {
            DivisorClass psi = psi_class(n, i);
            REQUIRE(psi.lambda() == 1);
            size_t expected_support = 0;
            for (Subset s = 1; s <= full_set(n); ++s) {
                if (subset_size(s) < 2) continue;
                if (subset_contains(s, i)) {
                    ++expected_support;
                    if (psi.coeff(s) != 1) FAIL("missing coefficient at n=", n, " i=", i);
                } else if (psi.coeff(s) != 0) {
                    FAIL("stray coefficient at n=", n, " i=", i);
                }
            }
            REQUIRE(psi.boundary().size() == expected_support);
        }
    }
}

TEST_CASE("canonical class") {
    CHECK(canonical_class(3) == divisor(3, Rat(-8), {{{1, 2, 3}, Rat(1)}}));
    CHECK(canonical_class(11).lambda() == 0);
    CHECK(canonical_class(2) == divisor(2, Rat(-9), {}));
}

TEST_CASE("curve pairing against delta_irr is derived from lambda") {
    CurveClass c(4);
    c.set_lambda_pairing(make_rat(7, 12));
    CHECK(c.delta_irr_pairing() == 7);
    CHECK(moving_test_curve(Signature({1, 1, -2})).delta_irr_pairing() == 0);
}

TEST_CASE("pairing examples") {
    Signature a({1, 1, -2});
    CHECK(pairing(moving_test_curve(a), hain_class(a)) == -1);
    CHECK(pairing(moving_test_curve(a), DivisorClass(3)) == 0);
    CHECK(pairing(moving_test_curve(a), boundary_class(3, sub({1, 2}, 3))) == 3);

    CHECK(thrown([&] { pairing(moving_test_curve(a), canonical_class(4)); }) ==
          errc::dimension_mismatch);
}

TEST_CASE("pairing is bilinear") {
    Prng rng(7);
    for (int round = 0; round < 50; ++round) {
        int n = static_cast<int>(rng.range(2, 6));
        auto random_divisor = [&] {
            DivisorClass d(n);
            d.set_lambda(rng.rational(9, 5));
            for (int k = 0; k < 4; ++k) {
                Subset s = static_cast<Subset>(rng.range(1, full_set(n)));
                if (subset_size(s) >= 2) d.set_coeff(s, rng.rational(9, 5));
            }
            return d;
        };
        CurveClass c(n);
        c.set_lambda_pairing(rng.rational(9, 5));
        for (int k = 0; k < 3; ++k) {
            Subset s = static_cast<Subset>(rng.range(1, full_set(n)));
            if (subset_size(s) >= 2) c.set_pairing(s, rng.rational(9, 5));
        }
        DivisorClass d1 = random_divisor(), d2 = random_divisor();
        Rat alpha = rng.rational(9, 5), beta = rng.rational(9, 5);
        CHECK(pairing(c, alpha * d1 + beta * d2) == alpha * pairing(c, d1) + beta * pairing(c, d2));
    }
}

TEST_CASE("relabel examples and action law") {
    Signature a({1, 1, -2});
    DivisorClass d = hain_class(a);
    CHECK(relabel(Permutation::identity(3), d) == d);
    CHECK(relabel(Permutation::transposition(3, 1, 3), d) == hain_class(Signature({-2, 1, 1})));

    // pairing is preserved when both sides are relabeled
    Permutation p = Permutation::transposition(3, 2, 3);
    CurveClass x = moving_test_curve(Signature({3, -2, -1}));
    CHECK(pairing(relabel(p, x), relabel(p, d)) == pairing(x, d));

    // group action: relabel(p*q, d) = relabel(p, relabel(q, d))
    Prng rng(11);
    for (int round = 0; round < 30; ++round) {
        int n = static_cast<int>(rng.range(2, 7));
        std::vector<int> img1, img2;
        for (int i = 1; i <= n; ++i) {
            img1.push_back(i);
            img2.push_back(i);
        }
        for (int i = n - 1; i > 0; --i) {
            std::swap(img1[static_cast<size_t>(i)], img1[static_cast<size_t>(rng.range(0, i))]);
            std::swap(img2[static_cast<size_t>(i)], img2[static_cast<size_t>(rng.range(0, i))]);
        }
        Permutation p1(img1), p2(img2);
        DivisorClass dc(n);
        dc.set_lambda(rng.rational(5, 3));
        for (int k = 0; k < 3; ++k) {
            Subset s = static_cast<Subset>(rng.range(1, full_set(n)));
            if (subset_size(s) >= 2) dc.set_coeff(s, rng.rational(5, 3));
        }
        CHECK(relabel(p1 * p2, dc) == relabel(p1, relabel(p2, dc)));
    }
}

TEST_CASE("class arithmetic stays normalized") {
    DivisorClass a = divisor(3, Rat(2), {{{1, 2}, Rat(3)}});
    DivisorClass b = divisor(3, Rat(-2), {{{1, 2}, Rat(-3)}, {{1, 3}, Rat(1)}});
    DivisorClass sum = a + b;
    CHECK(sum == divisor(3, Rat(0), {{{1, 3}, Rat(1)}}));
    CHECK(sum.boundary().size() == 1); // the cancelled entry is gone
    CHECK((Rat(0) * a).is_zero());
}

TEST_CASE("proportionality test") {
    DivisorClass a = divisor(3, Rat(2), {{{1, 2}, Rat(3)}});
    CHECK(proportional(a, make_rat(-7, 3) * a));
    CHECK(!proportional(a, divisor(3, Rat(2), {{{1, 2}, Rat(4)}})));
    CHECK(!proportional(a, DivisorClass(3)));
    CHECK(!proportional(a, divisor(3, Rat(2), {{{1, 2}, Rat(3)}, {{1, 3}, Rat(1)}})));
}

TEST_CASE("subset printing order") {
    DivisorClass d = divisor(4, Rat(0), {{{2, 3}, Rat(1)}, {{1, 4}, Rat(1)}, {{1, 2, 3}, Rat(1)}});
    // (size, lexicographic) order: {1,4} before {2,3} before {1,2,3}
    CHECK(d.str() == "\xce\xb4{1,4} + \xce\xb4{2,3} + \xce\xb4{1,2,3}");
}
