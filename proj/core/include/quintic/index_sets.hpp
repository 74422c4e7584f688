#pragma once

/**
 * The index sets of pair multisets driving the recursion: all multisets of
 * legal pairs with weight 5d+1-g, and the restricted subset whose contact
 * orders total at most 5d.
 */

#include <quintic/pair_set.hpp>

#include <functional>
#include <vector>

namespace quintic {

inline constexpr long kDefaultWeightLimit = 60;

// Streams every weight-(5d+1-g) multiset in canonical order. Nonpositive
// weight yields nothing (the empty multiset is deliberately excluded).
// Weight beyond `weight_limit` raises ResourceLimit.
void for_each_pair_set(const GdKey& key,
                       const std::function<void(const PairSet&)>& visit,
                       long weight_limit = kDefaultWeightLimit);

// Same stream filtered to contact_sum <= 5d.
void for_each_restricted_pair_set(const GdKey& key,
                                  const std::function<void(const PairSet&)>& visit,
                                  long weight_limit = kDefaultWeightLimit);

std::vector<PairSet> pair_sets(const GdKey& key,
                               long weight_limit = kDefaultWeightLimit);
std::vector<PairSet> restricted_pair_sets(const GdKey& key,
                                          long weight_limit = kDefaultWeightLimit);

bool in_pair_sets(const PairSet& zeta, const GdKey& key);
bool in_restricted_pair_sets(const PairSet& zeta, const GdKey& key);

// True iff some weight-(5d+1-g) multiset violates the contact-order bound.
// Equivalent to 5d >= 2g-1 for g >= 1; computed by enumeration with early
// exit so the closed predicate stays independently checkable.
bool has_exterior_element(const GdKey& key,
                          long weight_limit = kDefaultWeightLimit);

} // namespace quintic
