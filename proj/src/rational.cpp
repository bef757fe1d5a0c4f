#include "hahn/rational.hpp"

#include <cmath>

namespace hahn {

Integer iroot(const Integer& a, unsigned k) {
    if (a < 0 || k == 0) throw PreconditionFailed("iroot requires a >= 0, k >= 1");
    if (a <= 1 || k == 1) return a;
    Integer lo = 1, hi = Integer(1) << (msb(a) / k + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (pow(mid, k) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    Integer n = gcd(num(a) * den(b), num(b) * den(a));
    return Rational(n, den(a) * den(b));
}

Integer rat_ceil(const Rational& r) {
    Integer q = num(r) / den(r);
    if (q * den(r) < num(r)) ++q;
    return q;
}

std::optional<Rational> rational_pow(const Rational& base, const Rational& e) {
    if (base <= 0) throw NonPositive("rational_pow requires a positive base");
    Integer p = num(e);
    unsigned q = static_cast<unsigned>(den(e));
    Rational b = base;
    if (p < 0) {
        b = 1 / b;
        p = -p;
    }
    Integer n = pow(num(b), static_cast<unsigned>(p));
    Integer d = pow(den(b), static_cast<unsigned>(p));
    if (q == 1) return Rational(n, d);
    Integer rn = iroot(n, q), rd = iroot(d, q);
    if (pow(rn, q) != n || pow(rd, q) != d) return std::nullopt;
    return Rational(rn, rd);
}

Rational binomial_coefficient(const Rational& c, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= (c - i) / Rational(i + 1);
    return r;
}

std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer d(s.substr(slash + 1));
        if (d == 0) throw ZeroDivision("zero denominator in rational literal");
        return Rational(Integer(s.substr(0, slash)), d);
    } catch (const std::runtime_error& e) {
        throw SyntaxError(0, "bad rational literal '" + s + "'");
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace hahn
