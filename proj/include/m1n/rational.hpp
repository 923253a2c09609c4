#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace m1n {

// Exact arbitrary-precision rational. Every value passed around the library
// is kept canonical (lowest terms, positive denominator), which is what makes
// coefficientwise equality a valid test surface.
using Rat = mpq_class;

inline Rat make_rat(long long num, long long den = 1) {
    Rat q(static_cast<long>(num), static_cast<long>(den)); // LP64: no truncation
    q.canonicalize();
    return q;
}

inline int rat_sign(const Rat& q) { return sgn(q); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Serialized form is always "p/q" with q > 0 in lowest terms; zero is "0/1".
std::string rat_str(const Rat& q);

// Human-readable form: bare integer when the denominator is 1, else "p/q".
std::string rat_pretty(const Rat& q);

// Accepts "p/q" or "p" with an optional leading minus. Throws errc::bad_input.
Rat rat_parse(std::string_view s);

} // namespace m1n
