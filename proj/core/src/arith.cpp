#include <quintic/arith.hpp>
#include <quintic/errors.hpp>

#include <cctype>
#include <mutex>

namespace quintic {

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, bool allow_sign) -> BigInt {
        if (s.empty())
            throw ParseError("empty integer literal");
        std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            throw ParseError("bare sign is not an integer");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw ParseError("bad integer literal: " + std::string(s));
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, true));
    BigInt num = parse_int(text.substr(0, slash), true);
    // the canonical form keeps the sign in the numerator only
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0)
        throw ParseError("zero denominator: " + std::string(text));
    return Rational(std::move(num), std::move(den));
}

const BigInt& factorial(long n, long cap) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    if (n > cap)
        throw ResourceLimit("factorial: argument " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    static std::vector<BigInt> table{BigInt(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() * static_cast<long>(table.size()));
    return table[static_cast<std::size_t>(n)];
}

Rational binomial(long alpha, long beta) {
    if (alpha < beta) return Rational(0);
    if (alpha == beta) return Rational(1);
    if (beta < 0) return Rational(0); // alpha > beta here
    // usual binomial, alpha > beta >= 0
    return Rational(factorial(alpha) / (factorial(beta) * factorial(alpha - beta)));
}

Rational bernoulli(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bernoulli: index must be even and >= 2");
    // B_m from sum_{k=0}^{m} C(m+1,k) B_k = 0, seeded with B_0 = 1.
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        Rational acc(0);
        for (long k = 0; k < m; ++k)
            acc += binomial(m + 1, k) * table[static_cast<std::size_t>(k)];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[static_cast<std::size_t>(n)];
}

PolyQ PolyQ::operator+(const PolyQ& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(i) + rhs.coeff(i);
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-(const PolyQ& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(i) - rhs.coeff(i);
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator*(const PolyQ& rhs) const {
    if (is_zero() || rhs.is_zero()) return PolyQ();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator*(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& v : out) v *= c;
    return PolyQ(std::move(out));
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

SeriesQ series_compose_operator(const SeriesQ& s) {
    long n = s.order();
    // d/dx
    std::vector<Rational> deriv(static_cast<std::size_t>(n) + 1);
    for (long i = 1; i <= n; ++i)
        deriv[static_cast<std::size_t>(i) - 1] = s.coeff(static_cast<std::size_t>(i)) * Rational(i);
    // multiply by x, then by 1/(1-x) (prefix sums), truncating at order n
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    Rational run(0);
    for (long i = 1; i <= n; ++i) {
        run += deriv[static_cast<std::size_t>(i) - 1];
        out[static_cast<std::size_t>(i)] = run;
    }
    return SeriesQ(std::move(out));
}

} // namespace quintic
