#pragma once

/**
 * Factorials, the extended binomial convention, Bernoulli numbers, and
 * dense univariate polynomials / truncated power series over the rationals.
 */

#include <quintic/rational.hpp>

#include <vector>

namespace quintic {

inline constexpr long kFactorialCap = 200;

// n! with memoization; n beyond `cap` raises ResourceLimit.
const BigInt& factorial(long n, long cap = kFactorialCap);

// Extended binomial coefficient:
//   0 if alpha < beta; 1 if alpha == beta;
//   0 if alpha > beta and beta < 0; the usual value otherwise.
// Integer-valued but returned as Rational since callers combine it with
// fractions immediately.
Rational binomial(long alpha, long beta);

// Bernoulli number B_n in the B_1 = -1/2 convention (B_2 = 1/6).
// Only even n >= 2 are exposed.
Rational bernoulli(int n);

// Dense univariate polynomial over the rationals. The variable is abstract;
// it stands for the degree d or the series variable x depending on context.
class PolyQ {
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies x^i; no trailing zeros

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static PolyQ constant(Rational c) { return PolyQ({std::move(c)}); }
    // x^k with the given coefficient
    static PolyQ monomial(Rational c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return PolyQ(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PolyQ operator+(const PolyQ& rhs) const;
    PolyQ operator-(const PolyQ& rhs) const;
    PolyQ operator*(const PolyQ& rhs) const;
    PolyQ operator*(const Rational& c) const;
    bool operator==(const PolyQ& rhs) const { return coeffs_ == rhs.coeffs_; }

    Rational eval(const Rational& x) const; // Horner
};

// Power series truncated at a fixed order: coefficients of x^0 .. x^N.
class SeriesQ {
    std::vector<Rational> coeffs_;

public:
    explicit SeriesQ(long order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0)
            throw std::invalid_argument("SeriesQ: negative order");
    }
    SeriesQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("SeriesQ: needs at least the constant term");
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    Rational& at(std::size_t i) { return coeffs_.at(i); }
    bool operator==(const SeriesQ& rhs) const { return coeffs_ == rhs.coeffs_; }
};

// Applies (x/(1-x)) * d/dx to a truncated series, preserving the order.
SeriesQ series_compose_operator(const SeriesQ& s);

} // namespace quintic
