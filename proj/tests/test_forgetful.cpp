#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m1n/forgetful.hpp"
#include "m1n/prng.hpp"

#include "test_util.hpp"

using namespace m1n;
using test::divisor;
using test::sub;
using test::thrown;

TEST_CASE("pullback basics") {
    DivisorClass d = hain_class(Signature({1, 1, -2}));
    CHECK(pullback(d, 3, inclusion_keep(3)) == d);

    // the two displayed boundary rules at n = 4
    CHECK(pullback(boundary_class(3, sub({1, 2}, 3)), 4, inclusion_keep(3)) ==
          divisor(4, Rat(0), {{{1, 2}, Rat(1)}, {{1, 2, 4}, Rat(1)}}));
    CHECK(pullback(boundary_class(3, sub({1, 2, 3}, 3)), 4, inclusion_keep(3)) ==
          divisor(4, Rat(0), {{{1, 2, 3}, Rat(1)}, {{1, 2, 3, 4}, Rat(1)}}));

    CHECK(thrown([&] { pullback(d, 2, inclusion_keep(3)); }) == errc::invalid_dimension);
    CHECK(thrown([&] { pullback(d, 4, {1, 1, 2}); }) == errc::bad_subset);
    CHECK(thrown([&] { pullback(d, 4, {1, 2, 5}); }) == errc::bad_subset);
    CHECK(thrown([&] { pullback(d, 4, {1, 2}); }) == errc::dimension_mismatch);
}

TEST_CASE("pullback respects relabeled keep maps") {
    // keeping labels 2,4,5 of a 5-point space
    DivisorClass d = boundary_class(3, sub({1, 2}, 3));
    DivisorClass up = pullback(d, 5, {2, 4, 5});
    // S with S n {2,4,5} = {2,4}: add any subset of {1,3}
    CHECK(up == divisor(5, Rat(0),
                        {{{2, 4}, Rat(1)},
                         {{1, 2, 4}, Rat(1)},
                         {{2, 3, 4}, Rat(1)},
                         {{1, 2, 3, 4}, Rat(1)}}));
}

TEST_CASE("pullback is linear and functorial") {
    Prng rng(41);
    for (int round = 0; round < 40; ++round) {
        int m = static_cast<int>(rng.range(2, 4));
        int k = static_cast<int>(rng.range(m, 6));
        int n = static_cast<int>(rng.range(k, 7));

        DivisorClass d1(m), d2(m);
        d1.set_lambda(rng.rational(6, 3));
        d2.set_lambda(rng.rational(6, 3));
        for (int t = 0; t < 3; ++t) {
            Subset s = static_cast<Subset>(rng.range(1, full_set(m)));
            if (subset_size(s) >= 2) {
                d1.set_coeff(s, rng.rational(6, 3));
                d2.set_coeff(s, rng.rational(6, 3));
            }
        }

        // random strictly increasing keep maps m -> k and k -> n
        auto random_keep = [&](int from, int to) {
            std::vector<int> labels;
            for (int i = 1; i <= to; ++i) labels.push_back(i);
            for (int i = to - 1; i > 0; --i)
                std::swap(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(rng.range(0, i))]);
            labels.resize(static_cast<size_t>(from));
            return labels;
        };
        std::vector<int> keep1 = random_keep(m, k);
        std::vector<int> keep2 = random_keep(k, n);

        Rat alpha = rng.rational(6, 3), beta = rng.rational(6, 3);
        CHECK(pullback(alpha * d1 + beta * d2, k, keep1) ==
              alpha * pullback(d1, k, keep1) + beta * pullback(d2, k, keep1));

        // composite: label i of the m-point space sits at keep2[keep1[i]-1]
        std::vector<int> composite;
        for (int lab : keep1) composite.push_back(keep2[static_cast<size_t>(lab) - 1]);
        CHECK(pullback(pullback(d1, k, keep1), n, keep2) == pullback(d1, n, composite));
    }
}

TEST_CASE("pulled-back triple classes") {
    CHECK(pulled_back_hain_triple(3, 1, 1) == hain_class(Signature({1, 1, -2})));
    CHECK(pulled_back_hain_triple(4, 1, 1).coeff(sub({1, 2, 4}, 4)) == -1);
    CHECK(pulled_back_hain_triple(4, 2, -1).lambda() == 2);
    CHECK(thrown([] { pulled_back_hain_triple(2, 1, 1); }) == errc::invalid_dimension);
}

TEST_CASE("pulled-back triple agrees with the generic pullback") {
    for (int n = 3; n <= 6; ++n)
        for (long long a1 = -6; a1 <= 6; ++a1)
            for (long long a2 = -6; a2 <= 6; ++a2) {
                if (a1 == 0 && a2 == 0) continue;
                REQUIRE(pulled_back_hain_triple(n, a1, a2) ==
                        pullback(hain_class(Signature({a1, a2, -a1 - a2})), n, inclusion_keep(3)));
            }
}

TEST_CASE("pulled-back certificates") {
    auto r = pulled_back_certificate(5, 1, 1);
    CHECK(r.pairing == -1);
    CHECK(r.valid);
    CHECK(r.divisor.n() == 5);
    CHECK(r.assumptions.size() == 2);

    // n = 3 reduces to the direct certificate
    auto r3 = pulled_back_certificate(3, 2, -1);
    CHECK(r3.pairing == -1);
    CHECK(r3.divisor == hain_class(Signature({2, -1, -1})));

    CHECK(thrown([] { pulled_back_certificate(4, 2, 2); }) == errc::not_primitive);
    CHECK(thrown([] { pulled_back_certificate(4, 1, -1); }) == errc::zero_entry);
    CHECK(thrown([] { pulled_back_certificate(4, 0, 1); }) == errc::zero_entry);
}
