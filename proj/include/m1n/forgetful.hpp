#pragma once

#include "m1n/curves.hpp"
#include "m1n/divisor_class.hpp"

#include <vector>

namespace m1n {

// The inclusion {1..m} -> {1..n} keeping labels 1..m.
std::vector<int> inclusion_keep(int m);

// Pullback along the map forgetting every marked point outside keep's image.
// keep[i-1] is the label on the big space carrying the i-th label of d's
// space. lambda pulls back to lambda; delta_{0;T} pulls back to the sum of
// delta_{0;S} over all S whose intersection with the image of keep is
// exactly keep(T).
DivisorClass pullback(const DivisorClass& d, int n, const std::vector<int>& keep);

// The expanded class of the pullback of D_{(a1,a2,-a1-a2)} from the
// 3-pointed space, written directly from the four membership sums:
//   (-1 + a1^2 + a2^2 + a1 a2)(lambda + sum_{S >= {1,2,3}} delta_S)
//   - a1 a2    * sum_{{1,2} in S, 3 not in S} delta_S
//   + a1(a1+a2)* sum_{{1,3} in S, 2 not in S} delta_S
//   + a2(a1+a2)* sum_{{2,3} in S, 1 not in S} delta_S.
// Built independently of pullback() so the two routes check each other.
DivisorClass pulled_back_hain_triple(int n, long long a1, long long a2);

// Extremality certificate for the pullback of D_{(a1,a2,-a1-a2)}: the test
// curve meets the pullback in the same negative number as on the 3-pointed
// base, by the projection formula. Requires gcd(a1,a2) = 1 and a triple with
// all entries nonzero.
CertificateReport pulled_back_certificate(int n, long long a1, long long a2);

} // namespace m1n
