#include "m1n/reid_tai.hpp"

#include "m1n/error.hpp"

#include <numeric>

namespace m1n {

AgeProfile AgeProfile::make(long long k, std::vector<int> exps) {
    if (k < 2) fail(errc::out_of_range, "automorphism order must be at least 2");
    if (exps.empty()) fail(errc::bad_input, "exponent list must be nonempty");
    for (int e : exps)
        if (e < 0 || e >= k)
            fail(errc::out_of_range, "exponent " + std::to_string(e) + " outside 0.." + std::to_string(k - 1));
    return AgeProfile{k, std::move(exps)};
}

Rat age(const AgeProfile& p) {
    long long sum = 0;
    for (int e : p.exps) sum += e;
    return make_rat(sum, p.k);
}

bool is_quasi_reflection(const AgeProfile& p) {
    int nonzero = 0;
    for (int e : p.exps) nonzero += e != 0;
    return nonzero == 1;
}

bool ambiguous_quasi_reflection(const AgeProfile& p) {
    if (!is_quasi_reflection(p)) return false;
    for (int e : p.exps)
        if (e != 0) return std::gcd(static_cast<long long>(e), p.k) > 1;
    return false;
}

ReidTaiReport reid_tai_check(const std::vector<AgeProfile>& profiles) {
    ReidTaiReport report{{}, std::nullopt, true};
    for (const auto& p : profiles) {
        ProfileAssessment a{p, age(p), is_quasi_reflection(p), ambiguous_quasi_reflection(p)};
        if (!a.quasi_reflection) {
            if (!report.min_age || a.age < *report.min_age) report.min_age = a.age;
            if (a.age < 1) report.extends = false;
        }
        report.profiles.push_back(std::move(a));
    }
    return report;
}

} // namespace m1n
