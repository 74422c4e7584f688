#pragma once

/**
 * Alternating factorial-weighted power sums and their generating function:
 * the values sum_{D=1}^{m} (-1)^{m-D} D^{m+k-1} / ((m-D)! D!), their small-k
 * binomial closed forms, and the k-fold application of (x/(1-x)) d/dx to x
 * whose coefficients they are.
 */

#include <quintic/arith.hpp>
#include <quintic/rational.hpp>

#include <vector>

namespace quintic {

// Direct evaluation of the alternating sum; m >= 1, k >= 0.
Rational alternating_power_sum(int k, long m);

// Binomial closed forms, k in 1..4 only (UnsupportedShape otherwise):
// k=1 -> 1; k=2 -> C(m+1,2); k=3 -> C(m+3,4)+2C(m+2,4);
// k=4 -> C(m+5,6)+8C(m+4,6)+6C(m+3,6).
Rational alternating_power_sum_closed(int k, long m);

// k-fold application of the operator (x/(1-x)) d/dx to the series x,
// truncated at `order`; its x^m coefficient is alternating_power_sum(k,m).
SeriesQ power_sum_series(int k, long order);

struct CkTable {
    int k;
    std::vector<Rational> values; // values[m-1] = sum for m = 1..M
};
CkTable make_ck_table(int k, long M);

} // namespace quintic
