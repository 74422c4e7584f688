#include <quintic/closed_forms.hpp>
#include <quintic/errors.hpp>
#include <quintic/fiber.hpp>
#include <quintic/solver.hpp>

#include <algorithm>
#include <set>

namespace quintic {

namespace {

bool size_then_canonical(const PairSet& a, const PairSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// All restricted-set multisets rho that can receive a nonzero pairing
// against `zeta`: every unordered partition of zeta's pairs into blocks,
// each block merged into a single pair carrying the block's total weight
// split as (weight - n, n). Supersets are fine (extra rows solve to zero);
// misses are not, so the filters below only drop provably-zero couplings.
void candidates(const PairSet& zeta, const GdKey& key, std::set<PairSet>& out) {
    const auto& items = zeta.pairs();
    std::size_t q = items.size();
    std::vector<int> block_of(q, 0);

    auto emit = [&](int block_count) {
        std::vector<long> weight(block_count, 0), h_sum(block_count, 0);
        for (std::size_t t = 0; t < q; ++t) {
            weight[static_cast<std::size_t>(block_of[t])] += items[t].weight();
            h_sum[static_cast<std::size_t>(block_of[t])] += items[t].b;
        }
        std::vector<IntegerPair> chosen(static_cast<std::size_t>(block_count));
        std::function<void(int)> pick = [&](int i) {
            if (i == block_count) {
                PairSet rho(chosen);
                if (in_restricted_pair_sets(rho, key)) out.insert(rho);
                return;
            }
            auto idx = static_cast<std::size_t>(i);
            for (int n = 0; n <= 3; ++n) {
                long a = weight[idx] - n;
                if (a < 0) break;
                if (a == 0 && n == 0) continue;
                // the block's hyperplane budget n - sum(m) must be >= 0 for a
                // nonzero connected factor
                if (n < h_sum[idx]) continue;
                chosen[idx] = {a, n};
                pick(i + 1);
            }
        };
        pick(0);
    };

    // unordered set partitions via restricted growth strings
    std::function<void(std::size_t, int)> grow = [&](std::size_t t, int used) {
        if (t == q) {
            emit(used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block_of[t] = b;
            grow(t + 1, std::max(used, b + 1));
        }
    };
    if (q > 0) grow(0, 0);
}

} // namespace

PairSet principal_zeta(const GdKey& key) {
    if (key.d < 1)
        throw std::invalid_argument("principal_zeta: degree must be >= 1");
    if (key.g == 2) return PairSet({{5L * key.d - 2, 0}, {1, 0}});
    if (key.g == 3) return PairSet({{5L * key.d - 4, 0}, {1, 0}, {1, 0}});
    throw UnsupportedShape("principal_zeta: only genus 2 and 3 have a derived choice");
}

FMatrix build_fmatrix(const GdKey& key, long weight_limit) {
    FMatrix m;
    m.key = key;
    m.basis = restricted_pair_sets(key, weight_limit);
    std::sort(m.basis.begin(), m.basis.end(), size_then_canonical);
    std::size_t n = m.basis.size();
    m.entries.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.entries[i][j] = disconnected_fiber_pairing(m.basis[i], m.basis[j]);
            if (m.basis[i].size() > m.basis[j].size() && !m.entries[i][j].is_zero())
                throw IntegrityError("pairing matrix: nonzero entry below the "
                                     "pair-count diagonal");
            if (m.basis[i].size() == m.basis[j].size()) {
                Rational expect =
                    (i == j) ? Rational(automorphism_order(m.basis[i])) : Rational(0);
                if (m.entries[i][j] != expect)
                    throw IntegrityError(
                        "pairing matrix: equal-size block is not the "
                        "automorphism diagonal");
            }
        }
    }
    return m;
}

CoefficientSolution solve_coefficients(const GdKey& key, const PairSet& zeta) {
    if (!in_pair_sets(zeta, key))
        throw std::invalid_argument(
            "solve_coefficients: zeta has the wrong weight for (g,d)");

    // support closure under the merge moves
    std::set<PairSet> support;
    candidates(zeta, key, support);
    for (bool grown = true; grown;) {
        grown = false;
        std::set<PairSet> next = support;
        for (const auto& rho : support) candidates(rho, key, next);
        if (next.size() != support.size()) {
            support = std::move(next);
            grown = true;
        }
    }

    // back-substitution from the largest pair counts; pairings of equal-size
    // distinct multisets vanish, so earlier entries are exactly the ones a
    // given row can couple to
    std::vector<PairSet> order(support.begin(), support.end());
    std::sort(order.begin(), order.end(),
              [](const PairSet& a, const PairSet& b) { return size_then_canonical(b, a); });

    CoefficientSolution sol;
    sol.key = key;
    sol.zeta = zeta;
    std::vector<std::pair<PairSet, Rational>> solved;
    for (const auto& row : order) {
        Rational rhs = disconnected_fiber_pairing(row, zeta);
        for (const auto& [rho, c] : solved)
            rhs -= disconnected_fiber_pairing(row, rho) * c;
        Rational c = rhs / Rational(automorphism_order(row));
        solved.emplace_back(row, c);
        if (!c.is_zero()) sol.coeffs.emplace(row, c);
    }
    return sol;
}

MasterEquation assemble_master(const GdKey& key, const PairSet& zeta) {
    if (key.g != 2 && key.g != 3)
        throw std::invalid_argument("assemble_master: only genus 2 and 3 are supported");

    CoefficientSolution sol = solve_coefficients(key, zeta);
    MasterEquation eq;
    eq.key = key;
    eq.zeta = zeta;
    eq.lhs_terms.emplace_back(zeta, Rational(1));
    for (const auto& [rho, c] : sol.coeffs) eq.lhs_terms.emplace_back(rho, -c);

    if (in_restricted_pair_sets(zeta, key)) {
        // the combination collapses to zero identically; there is no
        // invariant multiple to extract
        eq.collapsed = true;
        eq.n_coefficient = Rational(0);
        return eq;
    }
    Rational n = b_coefficient(key, zeta);
    for (const auto& [rho, c] : sol.coeffs) n -= c * b_coefficient(key, rho);
    eq.n_coefficient = n;
    return eq;
}

} // namespace quintic
