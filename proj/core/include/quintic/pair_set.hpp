#pragma once

/**
 * Integer-pair multisets and their canonical form.
 *
 * A pair (a,b) carries a psi-product length a >= 0 and a hyperplane power
 * b in {0,1,2,3}; the pair (0,0) is excluded. Multisets of such pairs index
 * every invariant in the recursion. They are stored sorted decreasingly
 * under the order (a,b) > (a',b') iff a > a', or a = a' and b > b'.
 */

#include <quintic/rational.hpp>

#include <compare>
#include <string>
#include <vector>

namespace quintic {

struct IntegerPair {
    long a; // psi-product length, >= 0
    int b;  // hyperplane power, 0..3

    auto operator<=>(const IntegerPair&) const = default;
    long weight() const { return a + b; }
};

class PairSet {
    std::vector<IntegerPair> pairs_; // decreasing canonical order

public:
    PairSet() = default;
    // Canonicalizes (sorts) and validates; throws std::invalid_argument on
    // a (0,0) pair, negative a, or b outside 0..3.
    explicit PairSet(std::vector<IntegerPair> pairs);

    const std::vector<IntegerPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    long weight() const;      // sum of a_i + b_i
    long contact_sum() const; // sum of a_i + 1

    auto operator<=>(const PairSet&) const = default;

    // "[[3,0],[1,0]]", pairs in canonical order
    std::string str() const;
    static PairSet parse(std::string_view text);
};

// Product over distinct pairs of multiplicity!.
BigInt automorphism_order(const PairSet& zeta);

struct GdKey {
    int g = 0;
    int d = 0;

    long weight() const { return 5L * d + 1 - g; } // common pair-multiset weight
    auto operator<=>(const GdKey&) const = default;
};

// Weighted partition of 5d: contact orders decorated with a hyperplane power
// or the identity class. Identity parts always have contact order 1 and are
// tracked by count only.
struct WeightedPartition {
    struct Part {
        long contact_order; // >= 1
        int h_power;        // 0..3
        auto operator<=>(const Part&) const = default;
    };
    std::vector<Part> parts;
    long id_count = 0;
};

// {(a_i, b_i)} -> parts {(a_i + 1, H^{b_i})} padded with (1, Id) parts so the
// contact orders total 5d. Requires contact_sum(rho) <= 5d.
WeightedPartition to_weighted_partition(const PairSet& rho, const GdKey& key);

// Product of all contact orders (identity parts included) times the
// automorphism order of the decorated partition.
Rational gluing_multiplicity(const WeightedPartition& eta);

} // namespace quintic
