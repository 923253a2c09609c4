#include "m1n/sym.hpp"

namespace m1n {

namespace {

constexpr const char* kBoundaryCaveat =
    "the moving-curve constraints apply to irreducible effective divisors different from the "
    "boundary divisors; a boundary divisor may fail them without contradiction";

} // namespace

SymDivisorClass SymDivisorClass::make(int n, Rat a_irr, std::vector<Rat> b) {
    if (n < 1 || n > kMaxLabels) fail(errc::invalid_dimension, "n out of range");
    if (static_cast<int>(b.size()) != (n >= 2 ? n - 1 : 0))
        fail(errc::dimension_mismatch, "expected coefficients for k = 2..n");
    return SymDivisorClass{n, std::move(a_irr), std::move(b)};
}

std::string SymDivisorClass::str() const {
    std::string out = "(" + rat_pretty(a_irr) + "; ";
    for (int k = 2; k <= n; ++k) {
        if (k > 2) out += ", ";
        out += rat_pretty(bk(k));
    }
    return out + ")";
}

Rat sym_pairing(const SymCurveClass& c, const SymDivisorClass& d) {
    if (c.n != d.n) fail(errc::dimension_mismatch, "pairing classes on different quotients");
    Rat out = c.irr_pairing * d.a_irr;
    for (int k = 2; k <= d.n; ++k) out += c.bk(k) * d.bk(k);
    return out;
}

SymDivisorClass symmetrize(const DivisorClass& d) {
    const int n = d.n();
    std::vector<Rat> b(n >= 2 ? static_cast<size_t>(n - 1) : 0, Rat(0));
    if (n >= 2) {
        // stored coefficients are nonzero, so a size class is either fully
        // present with one common value or entirely zero
        std::vector<long long> seen(static_cast<size_t>(n - 1), 0);
        std::vector<long long> expected(static_cast<size_t>(n - 1), 0);
        {
            // binomial(n, k) by Pascal row
            std::vector<long long> row(static_cast<size_t>(n) + 1, 0);
            row[0] = 1;
            for (int i = 1; i <= n; ++i)
                for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
            for (int k = 2; k <= n; ++k) expected[static_cast<size_t>(k) - 2] = row[static_cast<size_t>(k)];
        }
        for (const auto& [s, c] : d.boundary()) {
            size_t idx = static_cast<size_t>(subset_size(s)) - 2;
            if (seen[idx] == 0)
                b[idx] = c;
            else if (b[idx] != c)
                fail(errc::not_symmetric, "coefficients of size-" + std::to_string(subset_size(s)) +
                                              " subsets differ");
            ++seen[idx];
        }
        for (int k = 2; k <= n; ++k) {
            size_t idx = static_cast<size_t>(k) - 2;
            if (seen[idx] != 0 && seen[idx] != expected[idx])
                fail(errc::not_symmetric,
                     "some size-" + std::to_string(k) + " subsets carry coefficient 0, others do not");
        }
    }
    return SymDivisorClass{n, d.lambda() / 12, std::move(b)};
}

bool in_boundary_cone(const SymDivisorClass& d) {
    if (d.a_irr < 0) return false;
    for (const Rat& v : d.b)
        if (v < 0) return false;
    return true;
}

std::vector<SymCurveClass> certificate_curves(int n, long long g) {
    if (n < 2 || n > kMaxLabels) fail(errc::invalid_dimension, "certificate curves need n >= 2");
    std::vector<SymCurveClass> out;
    const auto zeros = std::vector<Rat>(static_cast<size_t>(n - 1), Rat(0));

    if (g == 1) {
        SymCurveClass c{n, "C", Rat(0), zeros};
        c.b_pairings[0] = Rat(n - 1);
        out.push_back(std::move(c));
    }
    for (int j = 2; j <= n - 1; ++j) {
        SymCurveClass cj{n, "C_" + std::to_string(j), Rat(0), zeros};
        cj.b_pairings[static_cast<size_t>(j) - 2] = make_rat(-(2 * g - 2 + (n - j)));
        cj.b_pairings[static_cast<size_t>(j) - 1] = Rat(n - j);
        out.push_back(std::move(cj));
    }
    if (g == 1) {
        SymCurveClass cn{n, "C_" + std::to_string(n), Rat(12), zeros};
        cn.b_pairings[static_cast<size_t>(n) - 2] = Rat(-1);
        out.push_back(std::move(cn));
    }
    return out;
}

SymConstraintsReport nonboundary_constraints_check(const SymDivisorClass& d, long long g) {
    SymConstraintsReport report{d.n, g, {}, true, {}, kBoundaryCaveat};
    for (const auto& curve : certificate_curves(d.n, g)) {
        Rat value = sym_pairing(curve, d);
        bool ok = value >= 0;
        report.all_nonnegative = report.all_nonnegative && ok;
        report.pairings.push_back({curve.name, std::move(value), ok});
    }
    if (g == 1 && d.n >= 2) {
        report.chain.push_back({"b_2 >= 0", d.bk(2) >= 0});
        for (int j = 2; j <= d.n - 1; ++j)
            report.chain.push_back(
                {"b_" + std::to_string(j + 1) + " >= b_" + std::to_string(j), d.bk(j + 1) >= d.bk(j)});
        report.chain.push_back({"12 a_irr >= b_" + std::to_string(d.n), Rat(12) * d.a_irr >= d.bk(d.n)});
    }
    return report;
}

} // namespace m1n
