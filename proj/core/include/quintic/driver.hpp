#pragma once

/**
 * Top-level assembly: the degree-0 formula, the final linear solve for an
 * invariant from ingested equation data, coefficient consistency checks,
 * input parsing, and the invariant cache.
 */

#include <quintic/pair_set.hpp>
#include <quintic/rational.hpp>
#include <quintic/solver.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace quintic {

// Externally supplied data for one (g,d): ambient-space invariants (the
// A-values) and the non-principal constant of each equation line, keyed by
// the equation's pair multiset. Both maps must cover the principal zeta and
// every multiset with a nonzero elimination constant.
struct EquationInputs {
    GdKey key;
    long chi_quintic = 0; // Euler characteristic of the quintic, configuration
    std::map<PairSet, Rational> a_values;
    std::map<PairSet, Rational> npt_values;
};

struct Check {
    std::string name;
    bool pass;
};

struct SolveResult {
    Rational n;        // the solved invariant
    Rational c_master; // its coefficient in the combined equation
    std::vector<Check> checks;
};

// Degree-0 invariant (-1)^g (chi/2) |B_{2g}| |B_{2g-2}| / (2g(2g-2)(2g-2)!);
// g must be >= 2.
Rational degree_zero_invariant(int g, long chi);

// Solves N = [(A(zeta) - NPT(zeta)) - sum_rho c_rho (A(rho) - NPT(rho))] /
// master_coefficient for the principal zeta. Missing map keys raise
// MissingInput naming the absent multisets.
SolveResult solve_invariant(const GdKey& key, const EquationInputs& inputs);

// Cross-checks the invariant coefficients of the five standard (2,1)
// equations (0, 0, 1, 45, 293) against the closed forms; report-only.
std::vector<Check> check_equation_coefficients(const EquationInputs& inputs);

// Parses the input JSON document
//   {"genus": int, "degree": int, "chi_quintic": int,
//    "equations": [{"zeta": [[a,b],...], "A": "p/q", "NPT": "p/q"}, ...]}
// Schema violations raise ParseError naming the offending JSON path.
EquationInputs parse_equation_inputs(const std::string& json_text);
EquationInputs load_equation_inputs(const std::filesystem::path& file);

// Append-once cache of solved invariants. Entries never change: recording a
// different value for a present key raises IntegrityError.
struct InvariantStore {
    struct Entry {
        Rational value;
        std::string provenance; // formula | solved | ingested
    };
    std::map<GdKey, Entry> entries;
};

InvariantStore load_store(const std::filesystem::path& file); // absent file -> empty
void record(InvariantStore& store, const GdKey& key, const Rational& value,
            const std::string& provenance);
// Takes the advisory single-writer lock (file + ".lock") for the duration.
void save_store(const InvariantStore& store, const std::filesystem::path& file);

} // namespace quintic
