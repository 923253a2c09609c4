#include "m1n/cremona.hpp"

#include "m1n/hain.hpp"

#include <algorithm>

namespace m1n {

namespace {

void require_triple(const Signature& a) {
    if (a.n() != 3) fail(errc::invalid_dimension, "this map is defined on the 3-pointed space");
}

} // namespace

Signature cremona_signature_map(const Signature& a) {
    require_triple(a);
    return Signature({a[1] - a[3], a[2] + a[3], a[3]});
}

Signature apply_move(const Signature& a, const Move& m) {
    switch (m.kind) {
        case MoveKind::permute:
            if (!m.p) fail(errc::bad_input, "permute move without a permutation");
            return a.permuted(*m.p);
        case MoveKind::negate: return a.negated();
        case MoveKind::f_transform: return cremona_signature_map(a);
    }
    fail(errc::internal, "unreachable move kind");
}

namespace {

// Shared instances of the six relabelings keep the hot reduction loop from
// re-validating image arrays; the trace still stores its own copies.
const Permutation& s3_permutation(int p1, int p2, int p3) {
    static const std::vector<Permutation> table = {
        Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
        Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
    for (const Permutation& p : table)
        if (p(1) == p1 && p(2) == p2 && p(3) == p3) return p;
    fail(errc::internal, "not a permutation of {1,2,3}");
}

} // namespace

ReductionTrace reduce_signature(const Signature& a) {
    require_triple(a);
    if (!a.all_nonzero())
        fail(errc::zero_entry, "a zero entry is the boundary case; use the forgetful pullback instead");
    if (!a.primitive()) fail(errc::not_primitive, "reduction needs gcd = 1");

    ReductionTrace trace{a, {}, a};
    trace.steps.reserve(16);
    std::array<long long, 3> cur{a[1], a[2], a[3]};
    auto is_base = [](const std::array<long long, 3>& v) {
        int ones = 0, minus_two = 0;
        for (long long x : v) {
            ones += x == 1;
            minus_two += x == -2;
        }
        return ones == 2 && minus_two == 1;
    };
    auto permute_to = [&](int p1, int p2, int p3) {
        // position p(i) receives cur[i]
        std::array<long long, 3> next{};
        next[static_cast<size_t>(p1) - 1] = cur[0];
        next[static_cast<size_t>(p2) - 1] = cur[1];
        next[static_cast<size_t>(p3) - 1] = cur[2];
        cur = next;
        trace.steps.push_back({MoveKind::permute, s3_permutation(p1, p2, p3)});
    };

    long long max_abs = std::max({std::abs(cur[0]), std::abs(cur[1]), std::abs(cur[2])});
    // every f-step strictly shrinks max|a_i|, so 3 moves per round bounds the loop
    const long long guard_limit = 4 * max_abs + 16;
    long long guard = 0;
    while (true) {
        if (++guard > guard_limit) fail(errc::internal, "reduction failed to terminate");
        if (is_base(cur)) {
            if (cur != std::array<long long, 3>{1, 1, -2}) {
                // canonical end state: the -2 goes last, the 1s keep order
                int img[3], next_one = 1;
                for (int i = 0; i < 3; ++i) img[i] = cur[static_cast<size_t>(i)] == -2 ? 3 : next_one++;
                permute_to(img[0], img[1], img[2]);
            }
            break;
        }
        int positives = (cur[0] > 0) + (cur[1] > 0) + (cur[2] > 0);
        if (positives < 2) {
            for (auto& v : cur) v = -v;
            trace.steps.push_back({MoveKind::negate, std::nullopt});
            continue;
        }
        // sort into (larger positive, negative, smaller positive)
        int pos[2], count = 0, neg = 0;
        for (int i = 0; i < 3; ++i) {
            if (cur[static_cast<size_t>(i)] > 0)
                pos[count++] = i;
            else
                neg = i;
        }
        int big = pos[0], small = pos[1];
        if (cur[static_cast<size_t>(big)] < cur[static_cast<size_t>(small)]) std::swap(big, small);
        if (big != 0 || neg != 1) {
            int img[3];
            img[big] = 1;
            img[neg] = 2;
            img[small] = 3;
            permute_to(img[0], img[1], img[2]);
        }
        cur = {cur[0] - cur[2], cur[1] + cur[2], cur[2]};
        trace.steps.push_back({MoveKind::f_transform, std::nullopt});
    }
    trace.end = Signature({cur[0], cur[1], cur[2]});
    return trace;
}

Signature replay(const ReductionTrace& trace) {
    Signature cur = trace.start;
    for (const Move& m : trace.steps) cur = apply_move(cur, m);
    return cur;
}

namespace {

// Linear extension of a basis-image table on the rank-5 Picard space.
DivisorClass apply_basis_images(const DivisorClass& d, const DivisorClass& image13,
                                const DivisorClass& image23) {
    DivisorClass out(3);
    out.set_lambda(d.lambda()); // delta_irr -> delta_irr forces lambda -> lambda
    const Subset s12 = subset_from_labels({1, 2}, 3);
    const Subset s13 = subset_from_labels({1, 3}, 3);
    const Subset s23 = subset_from_labels({2, 3}, 3);
    out.add_coeff(s12, d.coeff(s12));
    out += d.coeff(s13) * image13;
    out += d.coeff(s23) * image23;
    out.add_coeff(full_set(3), d.coeff(full_set(3)));
    return out;
}

} // namespace

DivisorClass cremona_pushforward(const DivisorClass& d) {
    if (d.n() != 3) fail(errc::invalid_dimension, "this map is defined on the 3-pointed space");
    static const DivisorClass image13 = boundary_class(3, subset_from_labels({2, 3}, 3));
    static const DivisorClass image23 = hain_class(Signature({-1, 2, -1}));
    return apply_basis_images(d, image13, image23);
}

DivisorClass cremona_inverse_pushforward(const DivisorClass& d) {
    if (d.n() != 3) fail(errc::invalid_dimension, "this map is defined on the 3-pointed space");
    static const DivisorClass image13 = hain_class(Signature({2, -1, -1}));
    static const DivisorClass image23 = boundary_class(3, subset_from_labels({1, 3}, 3));
    return apply_basis_images(d, image13, image23);
}

} // namespace m1n
