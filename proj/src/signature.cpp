#include "m1n/signature.hpp"

#include <cstdlib>
#include <numeric>

namespace m1n {

Signature::Signature(std::vector<long long> entries) : a_(std::move(entries)) {
    if (a_.empty() || a_.size() > kMaxLabels)
        fail(errc::invalid_dimension, "signature length must be in 1.." + std::to_string(kMaxLabels));
    long long sum = 0;
    bool any = false;
    for (long long v : a_) {
        if (std::abs(v) > kMaxEntry)
            fail(errc::out_of_range, "signature entries are capped at |a_i| <= " + std::to_string(kMaxEntry));
        sum += v;
        any = any || v != 0;
    }
    if (sum != 0) fail(errc::not_zero_sum, "signature entries sum to " + std::to_string(sum) + ", expected 0");
    if (!any) fail(errc::degenerate_signature, "signature entries are all zero");
}

long long Signature::gcd() const {
    long long g = 0;
    for (long long v : a_) g = std::gcd(g, v);
    return g; // nonzero: at least one entry is
}

bool Signature::all_nonzero() const {
    for (long long v : a_)
        if (v == 0) return false;
    return true;
}

Subset Signature::support() const {
    Subset s = 0;
    for (int i = 1; i <= n(); ++i)
        if ((*this)[i] != 0) s |= singleton(i);
    return s;
}

int Signature::nonzero_count() const { return subset_size(support()); }

Signature Signature::stripped() const {
    std::vector<long long> out;
    for (long long v : a_)
        if (v != 0) out.push_back(v);
    return Signature(std::move(out));
}

Signature Signature::negated() const {
    std::vector<long long> out(a_);
    for (long long& v : out) v = -v;
    return Signature(std::move(out));
}

Signature Signature::permuted(const Permutation& p) const { return Signature(p.apply(a_)); }

std::string Signature::str() const {
    std::string out = "(";
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a_[i]);
    }
    return out + ")";
}

} // namespace m1n
