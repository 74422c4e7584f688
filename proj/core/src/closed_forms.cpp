#include <quintic/closed_forms.hpp>
#include <quintic/errors.hpp>

namespace quintic {

namespace {
Rational R(long n) { return Rational(n); }
Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }
} // namespace

Rational x_coeff(int g, int d) {
    long w = 5L * d + 1 - g;
    return R(w + 1) * (R(w) * R(g - 1) + R(5L * d));
}

Rational z_coeff(int g, int d, long l1, long l2) {
    Rational dd(static_cast<long>(d));
    long w = 5L * d + 1 - g;
    return R(5) * dd * dd * R(l2 + 1) +
           dd * (R(l1) * R(l1 + 1) + R(2L * g - 1) * R(l2) * R(l2 + 1)) / R(2) -
           R(w) * R(w - 1) * dd / R(2);
}

Rational f_term(int g, int d, long l1, long l2) {
    Rational dd(static_cast<long>(d));
    Rational t1 = R(5) * dd / R(2) *
                  (R(l1) * R(l1) * R(l1 + 1) + R(l2) * R(l2) * R(l2 + 1));
    Rational t2 = R(g - 1) / R(12) *
                  (R(l1) * (R(l1) * R(l1) - R(1)) * (R(3) * R(l1) + R(2)) +
                   R(l2) * (R(l2) * R(l2) - R(1)) * (R(3) * R(l2) + R(2)));
    Rational t3 = R(l1 + 1) * R(l2 + 1) / R(2) *
                  (R(25) * dd * dd * R(2L * g + 1) +
                   (R(5) * dd - R(l1) * R(l2)) * R(2L * g - 1) * R(1 - g));
    return t1 + t2 + t3;
}

Rational y_coeff(int g, int d, long l1, long l2) {
    long w = 5L * d + 1 - g;
    if (l1 + l2 != w)
        throw std::invalid_argument(
            "y_coeff: psi-lengths must sum to 5d+1-g (the formula is derived "
            "under that constraint)");
    return f_term(g, d, l1, l2) - f_term(g, d, w, 0) + R(5L * d) * x_coeff(g, d) +
           R(5L * d) * R(w);
}

Rational b_coefficient(const GdKey& key, const PairSet& zeta) {
    if (zeta.weight() != key.weight())
        throw std::invalid_argument(
            "b_coefficient: pair multiset weight does not match 5d+1-g");
    const auto& ps = zeta.pairs();
    if (ps.size() == 1) {
        switch (ps[0].b) {
        case 0: return x_coeff(key.g, key.d);
        case 1: return R(key.d);
        default: return R(0);
        }
    }
    if (ps.size() == 2) {
        // at most one pair may carry a hyperplane power
        IntegerPair marked = ps[0], plain = ps[1];
        if (marked.b == 0 && plain.b != 0) std::swap(marked, plain);
        if (plain.b != 0)
            throw UnsupportedShape(
                "b_coefficient: no closed form for two-pair shapes with two "
                "hyperplane insertions");
        switch (marked.b) {
        case 0: return y_coeff(key.g, key.d, marked.a, plain.a);
        case 1: return z_coeff(key.g, key.d, marked.a, plain.a);
        default: return R(0);
        }
    }
    if (ps.size() == 3 && key.g == 3) {
        PairSet expected({{5L * key.d - 4, 0}, {1, 0}, {1, 0}});
        if (zeta == expected) return three_point_quartic(key.d);
    }
    throw UnsupportedShape("b_coefficient: unsupported pair-multiset shape " +
                           zeta.str());
}

PolyQ three_point_quartic_poly() {
    return PolyQ({R(1344), R(-2760), R(-1950), R(3875), R(1875)});
}

Rational three_point_quartic(int d) {
    return three_point_quartic_poly().eval(R(d));
}

ThreePointCasePolys three_point_case_polys() {
    ThreePointCasePolys p;
    p.lead = PolyQ({R(2280), R(-7355), frac(33125, 4), frac(-61875, 8),
                    frac(143125, 24), frac(-3125, 8), frac(78125, 24)});
    p.mirrored = PolyQ({R(-188), frac(3820, 3), frac(-12225, 4), frac(125, 24),
                        frac(246875, 24), frac(-315625, 24), frac(109375, 24)});
    p.cubic = PolyQ({R(-528), R(1605), R(-975), R(-375)});
    p.remainder = PolyQ({R(-32), frac(1330, 3), frac(-12575, 4), frac(287375, 24),
                         frac(-591875, 24), frac(640625, 24), frac(-296875, 24)});
    return p;
}

ThreePointCases three_point_cases(int d) {
    if (d < 1)
        throw std::invalid_argument("three_point_cases: degree must be >= 1");
    auto p = three_point_case_polys();
    Rational dd = R(d);
    return {p.lead.eval(dd), p.mirrored.eval(dd), p.cubic.eval(dd),
            p.remainder.eval(dd)};
}

Rational tail_term(int d, long D) {
    long top = 5L * d - 3;
    if (D < 1 || D > top)
        throw std::invalid_argument("tail_term: D outside 1..5d-3");
    Rational dd = R(d);
    Rational bracket = R(375) * dd * dd * dd + R(225) * dd * dd - R(355) * dd +
                       R(84) -
                       R(top) * R(5L * d) * (R(5L * d) + R(8)) / R(D) -
                       R(D) * (R(75) * dd * dd - R(15) * dd + R(32)) +
                       R(4) * R(D) * R(D);
    int sign = ((top + 1 - D) % 2 == 0) ? 1 : -1;
    return R(sign) * Rational(BigInt(D)).pow(top + 1) /
           Rational(factorial(top - D) * factorial(D)) * bracket;
}

Rational tail_sum(int d) {
    Rational acc(0);
    for (long D = 1; D <= 5L * d - 3; ++D) acc += tail_term(d, D);
    return acc;
}

Rational closing_term(int d, long D) {
    long top = 5L * d - 2;
    if (D < 1 || D > top)
        throw std::invalid_argument("closing_term: D outside 1..5d-2");
    Rational dd = R(d);
    Rational d2 = dd * dd, d3 = d2 * dd, d4 = d3 * dd;
    Rational bracket =
        (R(-625) * d4 + R(1125) * d3 - R(750) * d2 + R(160) * dd) / (R(2) * R(D)) +
        (R(1875) * d4 - R(3500) * d3 + R(2475) * d2 - R(680) * dd + R(64)) / R(2) +
        (R(25) * d2 + R(35) * dd - R(28)) * R(D) - R(4) * R(D) * R(D);
    int sign = ((top + 1 - D) % 2 == 0) ? 1 : -1;
    return R(sign) * Rational(BigInt(D)).pow(top + 1) /
           Rational(factorial(top - D) * factorial(D)) * bracket;
}

Rational closing_sum(int d) {
    Rational acc(0);
    for (long D = 1; D <= 5L * d - 2; ++D) acc += closing_term(d, D);
    return acc;
}

Rational master_coefficient(int g, int d) {
    return master_coefficient_poly(g).eval(R(d));
}

PolyQ master_coefficient_poly(int g) {
    // 4(5d-1)(5d-2) and 24(5d-3)(5d-4)
    if (g == 2) return PolyQ({R(8), R(-60), R(100)});
    if (g == 3) return PolyQ({R(288), R(-840), R(600)});
    throw UnsupportedShape("master_coefficient: only genus 2 and 3 are derived");
}

} // namespace quintic
