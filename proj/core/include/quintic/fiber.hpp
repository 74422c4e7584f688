#pragma once

/**
 * Genus-0 fiber-class relative invariants: the connected closed form and the
 * disconnected pairing of two pair multisets built from it.
 */

#include <quintic/pair_set.hpp>
#include <quintic/rational.hpp>

#include <vector>

namespace quintic {

// One connected invariant: a single relative point of contact order mu
// carrying the class H^{rel_h_power}, plus a list of insertions, each a
// hyperplane power with a psi-product length.
struct FiberSpec {
    long mu = 1;        // contact order, >= 1
    int rel_h_power = 0; // hyperplane power on the relative point, 0..3
    struct Insertion {
        int h_power;  // n >= 0
        long psi_len; // l >= 0
    };
    std::vector<Insertion> insertions;

    // Budget left after folding every insertion power into the relative
    // class; recomputed on demand, never stored.
    int effective_budget() const {
        long h = 3 - rel_h_power;
        for (const auto& ins : insertions) h -= ins.h_power;
        return static_cast<int>(h);
    }
};

// Closed-form value of the connected invariant. Zero when the dimension
// constraint 1 - mu + sum(l_i) = h fails or the effective budget h leaves
// {0,..,3}; otherwise 5^{h+1} mu^{m-2} binomial(h+m-2, m-2) with m the
// insertion count. With m >= 3 the closed form is only valid when every
// (m-2)-subset of psi-lengths sums to at most mu; outside that region we
// raise FormulaHypothesisViolated rather than return a wrong number.
Rational connected_fiber_invariant(const FiberSpec& spec);

// Pairing of two pair multisets: sum over ordered partitions of zeta's pairs
// into one block per rho pair, each block feeding a connected invariant with
// contact order a_i + 1 and relative power 3 - b_i, a dual-class factor 1/5
// per block, and a global prefactor prod(a_i + 1). Upper triangular in the
// pair count: zero when |rho| > |zeta|, and when sizes tie it is
// automorphism_order(rho) on the diagonal and zero off it.
Rational disconnected_fiber_pairing(const PairSet& rho, const PairSet& zeta);

} // namespace quintic
