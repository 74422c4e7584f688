#pragma once

/**
 * Closed-form coefficient polynomials for the master equations: the one-,
 * two-, and three-point invariant coefficients, the localization case values
 * behind the three-point quartic, the alternating tail sums they rest on,
 * and the master coefficients multiplying the target invariant.
 */

#include <quintic/arith.hpp>
#include <quintic/pair_set.hpp>
#include <quintic/rational.hpp>

namespace quintic {

// One-point coefficient for the hyperplane-free shape:
// (5d+2-g)((5d+1-g)(g-1)+5d).
Rational x_coeff(int g, int d);

// Two-point coefficient with one hyperplane insertion:
// 5d^2(l2+1) + d(l1(l1+1)+(2g-1)l2(l2+1))/2 - (5d+1-g)(5d-g)d/2.
Rational z_coeff(int g, int d, long l1, long l2);

// The symmetric building block of the hyperplane-free two-point
// coefficient; meaningful on l1+l2 = 5d+1-g but evaluable anywhere.
Rational f_term(int g, int d, long l1, long l2);

// Hyperplane-free two-point coefficient, defined only on l1+l2 = 5d+1-g:
// f(l1,l2) - f(5d+1-g,0) + 5d*x_coeff + 5d(5d+1-g).
Rational y_coeff(int g, int d, long l1, long l2);

// Coefficient of the target invariant contributed by a supported pair
// multiset: one pair (l,m) -> x_coeff | d | 0 for m = 0 | 1 | {2,3};
// two pairs {(l1,m),(l2,0)} -> y_coeff | z_coeff | 0 likewise; the
// three-pair genus-3 shape {(5d-4,0),(1,0),(1,0)} -> the quartic below.
// Anything else raises UnsupportedShape.
Rational b_coefficient(const GdKey& key, const PairSet& zeta);

// The genus-3 three-point coefficient, 1875d^4+3875d^3-1950d^2-2760d+1344.
PolyQ three_point_quartic_poly();
Rational three_point_quartic(int d);

// The four distinct localization case totals whose combination
// lead + 2*mirrored + cubic + remainder gives the three-point quartic
// (the mirrored value occurs for two symmetric cases).
struct ThreePointCases {
    Rational lead;
    Rational mirrored;
    Rational cubic;
    Rational remainder;
};
ThreePointCases three_point_cases(int d); // d >= 1

struct ThreePointCasePolys {
    PolyQ lead;
    PolyQ mirrored;
    PolyQ cubic;
    PolyQ remainder;
};
ThreePointCasePolys three_point_case_polys();

// Alternating per-degree term whose sum over D = 1..5d-3 equals the
// `mirrored` sextic; D outside that range is an argument error.
Rational tail_term(int d, long D);
Rational tail_sum(int d);

// Same structure for the `remainder` sextic, summed over D = 1..5d-2.
Rational closing_term(int d, long D);
Rational closing_sum(int d);

// Master coefficient multiplying the target invariant:
// 4(5d-1)(5d-2) at genus 2, 24(5d-3)(5d-4) at genus 3; other genera
// raise UnsupportedShape.
Rational master_coefficient(int g, int d);
PolyQ master_coefficient_poly(int g);

} // namespace quintic
