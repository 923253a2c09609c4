#pragma once

#include "m1n/divisor_class.hpp"
#include "m1n/error.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace m1n::test {

inline Subset sub(std::initializer_list<int> labels, int n) {
    return subset_from_labels(std::vector<int>(labels), n);
}

// Runs fn and reports the error code it threw, if any.
template <typename Fn>
std::optional<errc> thrown(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

// Builds a divisor class from (lambda, {labels -> coeff}) literals.
inline DivisorClass divisor(int n, const Rat& lambda,
                            std::initializer_list<std::pair<std::initializer_list<int>, Rat>> terms) {
    DivisorClass d(n);
    d.set_lambda(lambda);
    for (const auto& [labels, c] : terms) d.set_coeff(sub(labels, n), c);
    return d;
}

inline CurveClass curve(int n, const Rat& lambda,
                        std::initializer_list<std::pair<std::initializer_list<int>, Rat>> terms) {
    CurveClass c(n);
    c.set_lambda_pairing(lambda);
    for (const auto& [labels, v] : terms) c.set_pairing(sub(labels, n), v);
    return c;
}

} // namespace m1n::test
