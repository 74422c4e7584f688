#pragma once

/**
 * The pairing matrix over the restricted index set, the triangular solve for
 * the elimination constants, and master-equation assembly.
 */

#include <quintic/index_sets.hpp>
#include <quintic/pair_set.hpp>
#include <quintic/rational.hpp>

#include <map>
#include <utility>
#include <vector>

namespace quintic {

// Dense pairing matrix over all of the restricted index set, basis ordered
// by ascending pair count with canonical order breaking ties. Entry (i,j)
// is the disconnected pairing of basis[i] against basis[j]; the matrix is
// upper triangular in the pair count with automorphism orders on the
// diagonal (both verified at construction).
struct FMatrix {
    GdKey key;
    std::vector<PairSet> basis;
    std::vector<std::vector<Rational>> entries;
};

FMatrix build_fmatrix(const GdKey& key, long weight_limit = kDefaultWeightLimit);

// Sparse solution of the triangular system: the unique constants c[rho] with
//   pairing(x, zeta) = sum_rho pairing(x, rho) * c[rho]
// for every x in the restricted set. Zero coefficients are omitted.
struct CoefficientSolution {
    GdKey key;
    PairSet zeta;
    std::map<PairSet, Rational> coeffs;
};

// Works on the support closure of zeta (the multisets reachable by merging
// blocks of pairs weight-preservingly), never materializing the full index
// set; coefficients outside the closure are provably zero. This is what
// keeps high degrees feasible: the full restricted set has hundreds of
// millions of elements at genus 2, degree 8, while the closure stays tiny.
CoefficientSolution solve_coefficients(const GdKey& key, const PairSet& zeta);

// The standard choice of zeta for each genus: {(5d-2,0),(1,0)} at genus
// 2 and {(5d-4,0),(1,0),(1,0)} at genus 3.
PairSet principal_zeta(const GdKey& key);

// One assembled master equation: the invariant-eliminating combination on
// the left and the coefficient multiplying the target invariant on the
// right. When zeta lies inside the restricted set the combination collapses
// to zero; `collapsed` is set and n_coefficient is 0 (callers must not
// divide by it).
struct MasterEquation {
    GdKey key;
    PairSet zeta;
    std::vector<std::pair<PairSet, Rational>> lhs_terms; // (zeta,1) then (rho,-c[rho])
    Rational n_coefficient;
    bool collapsed = false;
};

MasterEquation assemble_master(const GdKey& key, const PairSet& zeta);

} // namespace quintic
