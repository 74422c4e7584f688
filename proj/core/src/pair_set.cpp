#include <quintic/errors.hpp>
#include <quintic/pair_set.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>

namespace quintic {

PairSet::PairSet(std::vector<IntegerPair> pairs) : pairs_(std::move(pairs)) {
    for (const auto& p : pairs_) {
        if (p.a < 0)
            throw std::invalid_argument("PairSet: negative psi-length");
        if (p.b < 0 || p.b > 3)
            throw std::invalid_argument("PairSet: hyperplane power outside 0..3");
        if (p.a == 0 && p.b == 0)
            throw std::invalid_argument("PairSet: pair (0,0) is excluded");
    }
    std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

long PairSet::weight() const {
    long w = 0;
    for (const auto& p : pairs_) w += p.weight();
    return w;
}

long PairSet::contact_sum() const {
    long s = 0;
    for (const auto& p : pairs_) s += p.a + 1;
    return s;
}

std::string PairSet::str() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pairs_) arr.push_back({p.a, p.b});
    return arr.dump();
}

PairSet PairSet::parse(std::string_view text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("PairSet: ") + e.what());
    }
    if (!arr.is_array())
        throw ParseError("PairSet: expected an array of [a,b] pairs");
    std::vector<IntegerPair> pairs;
    for (const auto& el : arr) {
        if (!el.is_array() || el.size() != 2 || !el[0].is_number_integer() ||
            !el[1].is_number_integer())
            throw ParseError("PairSet: each element must be an integer pair [a,b]");
        pairs.push_back({el[0].get<long>(), el[1].get<int>()});
    }
    try {
        return PairSet(std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("PairSet: ") + e.what());
    }
}

BigInt automorphism_order(const PairSet& zeta) {
    BigInt result = 1;
    std::size_t i = 0;
    const auto& ps = zeta.pairs();
    while (i < ps.size()) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k)
            result *= static_cast<long>(k);
        i = j;
    }
    return result;
}

WeightedPartition to_weighted_partition(const PairSet& rho, const GdKey& key) {
    long id_count = 5L * key.d - rho.contact_sum();
    if (id_count < 0)
        throw std::invalid_argument(
            "to_weighted_partition: contact orders exceed 5d (identity "
            "multiplicity would be negative)");
    WeightedPartition eta;
    for (const auto& p : rho.pairs())
        eta.parts.push_back({p.a + 1, p.b});
    eta.id_count = id_count;
    return eta;
}

Rational gluing_multiplicity(const WeightedPartition& eta) {
    BigInt contact_product = 1;
    std::map<WeightedPartition::Part, long> mult;
    for (const auto& part : eta.parts) {
        contact_product *= part.contact_order;
        ++mult[part];
    }
    BigInt aut = 1;
    for (const auto& [part, count] : mult)
        for (long k = 2; k <= count; ++k)
            aut *= k;
    for (long k = 2; k <= eta.id_count; ++k)
        aut *= k;
    return Rational(contact_product * aut);
}

} // namespace quintic
