#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "hyperred/errors.hpp"

namespace hyperred {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1 after every operation.
using Rational = boost::multiprecision::cpp_rational;

/// n/d in canonical form. Throws ZeroDenominator when d = 0.
Rational rat(long long n, long long d);
Rational rat(const BigInt& n, const BigInt& d);

bool is_integer(const Rational& r);
bool is_nonpositive_integer(const Rational& r);

/// Rising factorial a(a+1)...(a+n-1); 1 for n = 0. Exact zero when a is a
/// nonpositive integer with |a| < n.
Rational pochhammer(const Rational& a, unsigned long n);

/// n! exactly.
BigInt factorial(unsigned long n);

/// Nearest double to the exact value, ties to even. Throws Overflow when the
/// magnitude exceeds the double range.
double to_float(const Rational& r);

/// Parses "p/q" or "p", base 10, optional leading minus on p only.
Rational parse_rational(std::string_view s);

/// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace hyperred
