#include <quintic/errors.hpp>
#include <quintic/index_sets.hpp>

namespace quintic {

namespace {

// Recursive descent over pairs in decreasing canonical order; each multiset
// is produced exactly once. The visitor returns false to abort.
bool descend(long remaining, IntegerPair bound, std::vector<IntegerPair>& acc,
             const std::function<bool(const PairSet&)>& visit) {
    if (remaining == 0)
        return acc.empty() ? true : visit(PairSet(acc));
    // next pair (a,b) <= bound with 1 <= a+b <= remaining
    for (long a = std::min(bound.a, remaining); a >= 0; --a) {
        int b_hi = (a == bound.a) ? bound.b : 3;
        b_hi = static_cast<int>(std::min<long>(b_hi, remaining - a));
        for (int b = b_hi; b >= 0; --b) {
            if (a == 0 && b == 0) continue;
            acc.push_back({a, b});
            bool keep_going = descend(remaining - (a + b), {a, b}, acc, visit);
            acc.pop_back();
            if (!keep_going) return false;
        }
    }
    return true;
}

void enumerate(const GdKey& key, long weight_limit,
               const std::function<bool(const PairSet&)>& visit) {
    long w = key.weight();
    if (w <= 0) return;
    if (w > weight_limit)
        throw ResourceLimit("pair-set enumeration: weight " + std::to_string(w) +
                            " exceeds limit " + std::to_string(weight_limit));
    std::vector<IntegerPair> acc;
    descend(w, {w, 3}, acc, visit);
}

} // namespace

void for_each_pair_set(const GdKey& key,
                       const std::function<void(const PairSet&)>& visit,
                       long weight_limit) {
    enumerate(key, weight_limit, [&](const PairSet& z) {
        visit(z);
        return true;
    });
}

void for_each_restricted_pair_set(const GdKey& key,
                                  const std::function<void(const PairSet&)>& visit,
                                  long weight_limit) {
    enumerate(key, weight_limit, [&](const PairSet& z) {
        if (z.contact_sum() <= 5L * key.d) visit(z);
        return true;
    });
}

std::vector<PairSet> pair_sets(const GdKey& key, long weight_limit) {
    std::vector<PairSet> out;
    for_each_pair_set(key, [&](const PairSet& z) { out.push_back(z); }, weight_limit);
    return out;
}

std::vector<PairSet> restricted_pair_sets(const GdKey& key, long weight_limit) {
    std::vector<PairSet> out;
    for_each_restricted_pair_set(
        key, [&](const PairSet& z) { out.push_back(z); }, weight_limit);
    return out;
}

bool in_pair_sets(const PairSet& zeta, const GdKey& key) {
    return !zeta.empty() && zeta.weight() == key.weight();
}

bool in_restricted_pair_sets(const PairSet& zeta, const GdKey& key) {
    return in_pair_sets(zeta, key) && zeta.contact_sum() <= 5L * key.d;
}

bool has_exterior_element(const GdKey& key, long weight_limit) {
    bool found = false;
    enumerate(key, weight_limit, [&](const PairSet& z) {
        if (z.contact_sum() > 5L * key.d) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace quintic
