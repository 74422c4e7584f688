#include <quintic/arith.hpp>
#include <quintic/errors.hpp>
#include <quintic/fiber.hpp>

#include <algorithm>
#include <functional>

namespace quintic {

Rational connected_fiber_invariant(const FiberSpec& spec) {
    if (spec.mu < 1)
        throw std::invalid_argument("connected_fiber_invariant: contact order must be >= 1");
    if (spec.rel_h_power < 0 || spec.rel_h_power > 3)
        throw std::invalid_argument("connected_fiber_invariant: relative power outside 0..3");

    long m = static_cast<long>(spec.insertions.size());
    int h = spec.effective_budget();
    long psi_total = 0;
    for (const auto& ins : spec.insertions) {
        if (ins.h_power < 0 || ins.psi_len < 0)
            throw std::invalid_argument("connected_fiber_invariant: negative insertion data");
        psi_total += ins.psi_len;
    }

    if (1 - spec.mu + psi_total != h) return Rational(0);
    if (h < 0 || h > 3) return Rational(0);

    if (m >= 3) {
        // The closed form needs every (m-2)-subset of psi-lengths to sum to
        // at most mu; the largest such subset suffices to check.
        std::vector<long> lens;
        lens.reserve(spec.insertions.size());
        for (const auto& ins : spec.insertions) lens.push_back(ins.psi_len);
        std::sort(lens.begin(), lens.end(), std::greater<>());
        long worst = 0;
        for (long i = 0; i < m - 2; ++i) worst += lens[static_cast<std::size_t>(i)];
        if (worst > spec.mu)
            throw FormulaHypothesisViolated(
                "connected_fiber_invariant: psi-length subset sum exceeds the "
                "contact order; the closed form does not apply");
    }

    return Rational(5).pow(h + 1) * Rational(spec.mu).pow(m - 2) *
           binomial(h + m - 2, m - 2);
}

Rational disconnected_fiber_pairing(const PairSet& rho, const PairSet& zeta) {
    if (rho.empty()) return Rational(zeta.empty() ? 1 : 0);
    if (rho.size() > zeta.size()) return Rational(0);
    // A block contributes a nonzero connected factor only when its insertion
    // weight equals its target pair's weight, so mismatched totals vanish.
    if (rho.weight() != zeta.weight()) return Rational(0);

    const auto& targets = rho.pairs();
    std::size_t p = targets.size();

    // Group zeta's pairs into classes of identical pairs. Instead of walking
    // ordered index partitions one index at a time (factorially many when
    // pairs repeat), distribute each class across the blocks and weight the
    // leaf by the multinomial count of index partitions it represents.
    struct ItemClass {
        IntegerPair pair;
        long count;
    };
    std::vector<ItemClass> classes;
    for (const auto& item : zeta.pairs()) {
        if (!classes.empty() && classes.back().pair == item)
            ++classes.back().count;
        else
            classes.push_back({item, 1});
    }
    std::size_t nc = classes.size();

    std::vector<long> used(p, 0);
    std::vector<std::vector<long>> alloc(p, std::vector<long>(nc, 0));
    Rational total(0);

    auto leaf = [&]() {
        Rational term(1);
        for (std::size_t i = 0; i < p; ++i) {
            FiberSpec spec;
            spec.mu = targets[i].a + 1;
            spec.rel_h_power = 3 - targets[i].b;
            for (std::size_t c = 0; c < nc; ++c)
                for (long k = 0; k < alloc[i][c]; ++k)
                    spec.insertions.push_back({classes[c].pair.b, classes[c].pair.a});
            Rational v = connected_fiber_invariant(spec);
            if (v.is_zero()) return;
            term *= v / Rational(5); // dual-class normalization per block
        }
        BigInt ways = 1;
        for (std::size_t c = 0; c < nc; ++c) {
            ways *= factorial(classes[c].count);
            for (std::size_t i = 0; i < p; ++i)
                ways /= factorial(alloc[i][c]);
        }
        total += term * Rational(ways);
    };

    std::function<void(std::size_t)> next_class;
    std::function<void(std::size_t, std::size_t, long)> place =
        [&](std::size_t c, std::size_t i, long remaining) {
            if (i == p) {
                if (remaining == 0) next_class(c + 1);
                return;
            }
            long w = classes[c].pair.weight();
            long room = (targets[i].weight() - used[i]) / w;
            for (long x = 0; x <= std::min(remaining, room); ++x) {
                used[i] += x * w;
                alloc[i][c] = x;
                place(c, i + 1, remaining - x);
                alloc[i][c] = 0;
                used[i] -= x * w;
            }
        };
    next_class = [&](std::size_t c) {
        if (c == nc) {
            // total weights match and no block overflows, so every block is
            // exactly full here
            leaf();
            return;
        }
        place(c, 0, classes[c].count);
    };
    next_class(0);

    Rational prefactor(1);
    for (const auto& tp : targets) prefactor *= Rational(tp.a + 1);
    return prefactor * total;
}

} // namespace quintic
