#pragma once

#include "m1n/error.hpp"
#include "m1n/labels.hpp"
#include "m1n/permutation.hpp"

#include <string>
#include <vector>

namespace m1n {

// A zero-sum integer tuple (a_1,...,a_n), not all zero: the defining data of
// the divisor D_a. Construction validates, so a Signature in hand is valid.
// Entries are capped so every coefficient formula stays inside 64-bit
// integers before promotion to rationals.
class Signature {
  public:
    static constexpr long long kMaxEntry = 1'000'000;

    // Throws errc::not_zero_sum / errc::degenerate_signature / errc::invalid_dimension.
    explicit Signature(std::vector<long long> entries);

    int n() const { return static_cast<int>(a_.size()); }
    const std::vector<long long>& entries() const { return a_; }
    long long operator[](int i) const { return a_[static_cast<size_t>(i) - 1]; } // 1-based

    // gcd over nonzero entries, always positive.
    long long gcd() const;
    bool primitive() const { return gcd() == 1; }

    bool all_nonzero() const;
    Subset support() const;     // labels with a_i != 0
    int nonzero_count() const;

    // Drops zero entries, preserving order.
    Signature stripped() const;
    Signature negated() const;
    Signature permuted(const Permutation& p) const;

    bool operator==(const Signature&) const = default;

    std::string str() const; // "(1,1,-2)"

  private:
    std::vector<long long> a_;
};

} // namespace m1n
