#include <quintic/errors.hpp>
#include <quintic/power_sums.hpp>

namespace quintic {

Rational alternating_power_sum(int k, long m) {
    if (m < 1 || k < 0)
        throw std::invalid_argument("alternating_power_sum: need m >= 1, k >= 0");
    Rational acc(0);
    for (long D = 1; D <= m; ++D) {
        BigInt num = boost::multiprecision::pow(BigInt(D),
                                               static_cast<unsigned>(m + k - 1));
        Rational term = Rational(num) / Rational(factorial(m - D) * factorial(D));
        acc += ((m - D) % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational alternating_power_sum_closed(int k, long m) {
    switch (k) {
    case 1: return Rational(1);
    case 2: return binomial(m + 1, 2);
    case 3: return binomial(m + 3, 4) + Rational(2) * binomial(m + 2, 4);
    case 4:
        return binomial(m + 5, 6) + Rational(8) * binomial(m + 4, 6) +
               Rational(6) * binomial(m + 3, 6);
    default:
        throw UnsupportedShape(
            "alternating_power_sum_closed: closed forms known for k in 1..4");
    }
}

SeriesQ power_sum_series(int k, long order) {
    if (order < 1)
        throw std::invalid_argument("power_sum_series: order must be >= 1");
    SeriesQ s(order);
    s.at(1) = Rational(1); // the series x
    for (int i = 0; i < k; ++i) s = series_compose_operator(s);
    return s;
}

CkTable make_ck_table(int k, long M) {
    CkTable t;
    t.k = k;
    for (long m = 1; m <= M; ++m) t.values.push_back(alternating_power_sum(k, m));
    return t;
}

} // namespace quintic
