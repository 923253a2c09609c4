#include "m1n/divisor_class.hpp"

namespace m1n {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > kMaxLabels)
        fail(errc::invalid_dimension,
             "marked-point count must be in 1.." + std::to_string(kMaxLabels) + ", got " + std::to_string(n));
}

std::string term_str(const Rat& c, const std::string& sym, bool first) {
    std::string out;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first)
        out += (c < 0) ? "-" : "";
    else
        out += (c < 0) ? " - " : " + ";
    if (a != 1) out += rat_is_integer(a) ? rat_pretty(a) : ("(" + rat_str(a) + ")");
    out += sym;
    return out;
}

} // namespace

DivisorClass::DivisorClass(int n) : n_(n), lambda_(0) { check_dimension(n); }

void DivisorClass::check_subset(Subset s) const {
    if (!subset_in_range(s, n_) || subset_size(s) < 2)
        fail(errc::bad_subset, "boundary subset " + subset_str(s) + " invalid for n = " + std::to_string(n_));
}

Rat DivisorClass::coeff(Subset s) const {
    check_subset(s);
    auto it = boundary_.find(s);
    return it == boundary_.end() ? Rat(0) : it->second;
}

void DivisorClass::set_coeff(Subset s, Rat value) {
    check_subset(s);
    if (value == 0)
        boundary_.erase(s);
    else
        boundary_[s] = std::move(value);
}

void DivisorClass::add_coeff(Subset s, const Rat& value) {
    check_subset(s);
    auto [it, inserted] = boundary_.try_emplace(s, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) boundary_.erase(it);
    } else if (it->second == 0) {
        boundary_.erase(it);
    }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (n_ != o.n_) fail(errc::dimension_mismatch, "adding classes with different n");
    lambda_ += o.lambda_;
    for (const auto& [s, c] : o.boundary_) add_coeff(s, c);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (n_ != o.n_) fail(errc::dimension_mismatch, "subtracting classes with different n");
    lambda_ -= o.lambda_;
    for (const auto& [s, c] : o.boundary_) add_coeff(s, Rat(-c));
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& c) {
    if (c == 0) {
        lambda_ = 0;
        boundary_.clear();
        return *this;
    }
    lambda_ *= c;
    for (auto& [s, v] : boundary_) v *= c;
    return *this;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass out(*this);
    out *= Rat(-1);
    return out;
}

std::string DivisorClass::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    if (lambda_ != 0) {
        out += term_str(lambda_, "\xce\xbb", first);
        first = false;
    }
    for (const auto& [s, c] : boundary_) {
        out += term_str(c, "\xce\xb4" + subset_str(s), first);
        first = false;
    }
    return out;
}

CurveClass::CurveClass(int n) : n_(n), lambda_(0) { check_dimension(n); }

void CurveClass::check_subset(Subset s) const {
    if (!subset_in_range(s, n_) || subset_size(s) < 2)
        fail(errc::bad_subset, "boundary subset " + subset_str(s) + " invalid for n = " + std::to_string(n_));
}

Rat CurveClass::pairing_with(Subset s) const {
    check_subset(s);
    auto it = boundary_.find(s);
    return it == boundary_.end() ? Rat(0) : it->second;
}

void CurveClass::set_pairing(Subset s, Rat value) {
    check_subset(s);
    if (value == 0)
        boundary_.erase(s);
    else
        boundary_[s] = std::move(value);
}

std::string CurveClass::str() const {
    std::string out = "\xce\xbb \xe2\x86\xa6 " + rat_pretty(lambda_);
    for (const auto& [s, c] : boundary_)
        out += ", \xce\xb4" + subset_str(s) + " \xe2\x86\xa6 " + rat_pretty(c);
    return out;
}

DivisorClass delta_irr_class(int n) {
    DivisorClass d(n);
    d.set_lambda(Rat(12));
    return d;
}

DivisorClass psi_class(int n, int i) {
    check_dimension(n);
    if (i < 1 || i > n)
        fail(errc::invalid_label, "psi label " + std::to_string(i) + " outside 1.." + std::to_string(n));
    DivisorClass d(n);
    d.set_lambda(Rat(1));
    Subset all = full_set(n);
    for (Subset s = 1; s <= all; ++s)
        if (subset_contains(s, i) && subset_size(s) >= 2) d.set_coeff(s, Rat(1));
    return d;
}

DivisorClass canonical_class(int n) {
    check_dimension(n);
    DivisorClass d(n);
    d.set_lambda(Rat(n - 11));
    Subset all = full_set(n);
    for (Subset s = 1; s <= all; ++s) {
        int k = subset_size(s);
        if (k >= 2) d.set_coeff(s, Rat(k - 2));
    }
    return d;
}

DivisorClass boundary_class(int n, Subset s) {
    DivisorClass d(n);
    d.set_coeff(s, Rat(1));
    return d;
}

Rat pairing(const CurveClass& c, const DivisorClass& d) {
    if (c.n() != d.n())
        fail(errc::dimension_mismatch, "pairing a curve on " + std::to_string(c.n()) + " points with a divisor on " +
                                           std::to_string(d.n()));
    Rat out = c.lambda_pairing() * d.lambda();
    // Iterate the sparser table; curve classes are sparse, Hain classes dense.
    if (c.boundary().size() <= d.boundary().size()) {
        for (const auto& [s, v] : c.boundary()) out += v * d.coeff(s);
    } else {
        for (const auto& [s, v] : d.boundary()) out += v * c.pairing_with(s);
    }
    return out;
}

DivisorClass relabel(const Permutation& p, const DivisorClass& d) {
    if (p.n() != d.n()) fail(errc::dimension_mismatch, "permutation size does not match class dimension");
    DivisorClass out(d.n());
    out.set_lambda(d.lambda());
    for (const auto& [s, c] : d.boundary()) out.set_coeff(p.apply(s), c);
    return out;
}

CurveClass relabel(const Permutation& p, const CurveClass& c) {
    if (p.n() != c.n()) fail(errc::dimension_mismatch, "permutation size does not match class dimension");
    CurveClass out(c.n());
    out.set_lambda_pairing(c.lambda_pairing());
    for (const auto& [s, v] : c.boundary()) out.set_pairing(p.apply(s), v);
    return out;
}

bool proportional(const DivisorClass& a, const DivisorClass& b) {
    if (a.n() != b.n()) fail(errc::dimension_mismatch, "comparing classes with different n");
    if (a.is_zero() || b.is_zero()) return false;
    // a = r*b forces matching supports; cross-multiply to avoid division.
    if (a.boundary().size() != b.boundary().size()) return false;
    if ((a.lambda() == 0) != (b.lambda() == 0)) return false;
    Rat num(0), den(0); // r = num/den taken from the first nonzero coordinate
    auto ratio_ok = [&](const Rat& x, const Rat& y) {
        if (den == 0) {
            num = x;
            den = y;
            return true;
        }
        return x * den == y * num;
    };
    if (a.lambda() != 0 && !ratio_ok(a.lambda(), b.lambda())) return false;
    auto ita = a.boundary().begin();
    auto itb = b.boundary().begin();
    for (; ita != a.boundary().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!ratio_ok(ita->second, itb->second)) return false;
    }
    return true;
}

} // namespace m1n
