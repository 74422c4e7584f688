#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quintic {

// The connected-invariant closed form has a genuine blind spot: with three or
// more insertions it is only proved under a smallness hypothesis on the
// psi-lengths. We refuse to guess a value there.
class FormulaHypothesisViolated : public std::runtime_error {
public:
    explicit FormulaHypothesisViolated(const std::string& what)
        : std::runtime_error(what) {}
};

// A coefficient closed form was requested for a pair multiset it does not
// cover (e.g. a two-pair shape with two nonzero hyperplane powers).
class UnsupportedShape : public std::runtime_error {
public:
    explicit UnsupportedShape(const std::string& what)
        : std::runtime_error(what) {}
};

// Equation inputs lack required pair-multiset keys; `missing` holds their
// serialized forms.
class MissingInput : public std::runtime_error {
public:
    MissingInput(const std::string& what, std::vector<std::string> missing_keys)
        : std::runtime_error(what), missing(std::move(missing_keys)) {}
    std::vector<std::string> missing;
};

// Malformed external data (JSON schema violations, bad rational literals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration or memoization cap was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what)
        : std::runtime_error(what) {}
};

// Stored state disagrees with a recomputation, or the cache lock is held.
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace quintic
