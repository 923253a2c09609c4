#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m1n/reid_tai.hpp"

#include "test_util.hpp"

using namespace m1n;
using test::thrown;

TEST_CASE("age") {
    CHECK(age(AgeProfile::make(2, {1, 1})) == 1);
    CHECK(age(AgeProfile::make(3, {1, 2})) == 1);
    CHECK(age(AgeProfile::make(5, {0, 0, 0})) == 0);
    CHECK(age(AgeProfile::make(4, {1, 2, 1})) == 1);
    CHECK(thrown([] { AgeProfile::make(3, {3}); }) == errc::out_of_range);
    CHECK(thrown([] { AgeProfile::make(1, {0}); }) == errc::out_of_range);
    CHECK(thrown([] { AgeProfile::make(3, {}); }) == errc::bad_input);
}

TEST_CASE("quasi-reflection detection") {
    AgeProfile half = AgeProfile::make(2, {1, 0, 0});
    CHECK(is_quasi_reflection(half));
    CHECK(age(half) == make_rat(1, 2));
    CHECK(!ambiguous_quasi_reflection(half));

    CHECK(!is_quasi_reflection(AgeProfile::make(2, {1, 1})));

    AgeProfile quarter = AgeProfile::make(4, {1, 0});
    CHECK(is_quasi_reflection(quarter));
    CHECK(age(quarter) == make_rat(1, 4));
    CHECK(!ambiguous_quasi_reflection(quarter));

    // single nonzero exponent that is not coprime to the order: flagged
    AgeProfile odd = AgeProfile::make(4, {2, 0});
    CHECK(is_quasi_reflection(odd));
    CHECK(ambiguous_quasi_reflection(odd));
    CHECK(age(odd) != make_rat(1, 4));
}

TEST_CASE("reid-tai verdicts") {
    auto all_one = reid_tai_check(
        {AgeProfile::make(2, {1, 1}), AgeProfile::make(3, {1, 2}), AgeProfile::make(4, {1, 2, 1})});
    CHECK(all_one.extends);
    REQUIRE(all_one.min_age.has_value());
    CHECK(*all_one.min_age == 1);
    for (const auto& p : all_one.profiles) CHECK(p.age == 1);

    // only quasi-reflections: vacuously extends
    auto vac = reid_tai_check({AgeProfile::make(2, {1})});
    CHECK(vac.extends);
    CHECK(!vac.min_age.has_value());
    CHECK(vac.profiles[0].quasi_reflection);

    // both profiles are quasi-reflections (second has one nonzero exponent)
    auto both = reid_tai_check({AgeProfile::make(2, {1, 0, 0, 0}), AgeProfile::make(3, {1, 0})});
    CHECK(both.extends);
    CHECK(!both.min_age.has_value());

    // a genuine small age blocks extension
    auto blocked = reid_tai_check({AgeProfile::make(4, {1, 1})});
    CHECK(!blocked.extends);
    REQUIRE(blocked.min_age.has_value());
    CHECK(*blocked.min_age == make_rat(1, 2));
}

TEST_CASE("age additivity and inverse relation") {
    for (long long k = 2; k <= 9; ++k) {
        for (int e1 = 0; e1 < k; ++e1) {
            for (int e2 = 0; e2 < k; ++e2) {
                AgeProfile joint = AgeProfile::make(k, {e1, e2});
                CHECK(age(joint) ==
                      age(AgeProfile::make(k, {e1})) + age(AgeProfile::make(k, {e2})));

                // age(p) + age(p^{-1}) counts the nonzero exponents
                std::vector<int> inverse;
                for (int e : joint.exps) inverse.push_back(e == 0 ? 0 : static_cast<int>(k) - e);
                int nonzero = (e1 != 0) + (e2 != 0);
                CHECK(age(joint) + age(AgeProfile::make(k, inverse)) == nonzero);
            }
        }
    }
}

TEST_CASE("appendix contribution fixtures") {
    // elliptic-tail contributions: 1/2 + 1/2, 1/3 + 2/3, 1/4 + (2/4 + 1/4)
    CHECK(age(AgeProfile::make(2, {1})) == make_rat(1, 2));
    CHECK(age(AgeProfile::make(3, {1})) == make_rat(1, 3));
    CHECK(age(AgeProfile::make(3, {2})) == make_rat(2, 3));
    CHECK(age(AgeProfile::make(4, {1})) == make_rat(1, 4));
    CHECK(age(AgeProfile::make(4, {2, 1})) == make_rat(3, 4));
    // the n-pointed elliptic involution: age (n-1)/2 >= 1 for n = 3, 4
    CHECK(age(AgeProfile::make(2, {1, 1})) == make_rat(2, 2));
    CHECK(age(AgeProfile::make(2, {1, 1, 1})) == make_rat(3, 2));
}
