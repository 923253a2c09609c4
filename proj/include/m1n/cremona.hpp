#pragma once

#include "m1n/divisor_class.hpp"
#include "m1n/signature.hpp"

#include <optional>
#include <vector>

namespace m1n {

// The birational self-map f of the 3-pointed space sending
// (E; p1, p2, p3) to (E; p1, p2, p2 + p3 - p1). It is an isomorphism in
// codimension one, so it acts linearly on the rank-5 Picard space.

// The induced signature map: (a1, a2, a3) -> (a1 - a3, a2 + a3, a3).
// Preserves zero-sum and gcd.
Signature cremona_signature_map(const Signature& a);

enum class MoveKind { permute, negate, f_transform };

struct Move {
    MoveKind kind;
    std::optional<Permutation> p; // present iff kind == permute
};

Signature apply_move(const Signature& a, const Move& m);

// A certified reduction of a primitive nonzero zero-sum triple to (1,1,-2)
// using relabelings, negation (D_a = D_{-a}) and the f-transform. Replaying
// the steps from start must reproduce end; max|a_i| strictly decreases at
// every f-step.
struct ReductionTrace {
    Signature start;
    std::vector<Move> steps;
    Signature end;
};

ReductionTrace reduce_signature(const Signature& a);

// Applies the trace's steps to its start.
Signature replay(const ReductionTrace& trace);

// Pushforward of divisor classes under f, by linear extension of the basis
// table: lambda -> lambda, d12 -> d12, d13 -> d23, d23 -> D_{(-1,2,-1)},
// d123 -> d123.
DivisorClass cremona_pushforward(const DivisorClass& d);

// Pushforward under f^{-1}: lambda -> lambda, d12 -> d12,
// d13 -> D_{(2,-1,-1)}, d23 -> d13, d123 -> d123.
DivisorClass cremona_inverse_pushforward(const DivisorClass& d);

} // namespace m1n
