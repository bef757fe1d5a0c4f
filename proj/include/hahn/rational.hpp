#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "hahn/errors.hpp"

namespace hahn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline int sgn(const Rational& r) { return r.sign(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Largest n with n^k <= a, for a >= 0, k >= 1.
Integer iroot(const Integer& a, unsigned k);

/// gcd on positive rationals: largest q with both arguments integer multiples of q.
Rational rat_gcd(const Rational& a, const Rational& b);

/// Smallest integer >= a/b-style rational.
Integer rat_ceil(const Rational& r);

/// base^e for rational e = p/q; empty if the exact q-th root does not exist in Q.
/// Requires base > 0.
std::optional<Rational> rational_pow(const Rational& base, const Rational& e);

/// Generalized binomial coefficient c(c-1)...(c-n+1)/n!.
Rational binomial_coefficient(const Rational& c, unsigned n);

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s); // "p" or "p/q"

double to_double(const Rational& r);

} // namespace hahn
