#include "hyperred/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace hyperred {

namespace mp = boost::multiprecision;

Rational rat(const BigInt& n, const BigInt& d) {
    if (d == 0) {
        throw ZeroDenominator("rational denominator is zero");
    }
    // cpp_rational rejects negative denominators outright; move the sign up.
    if (d < 0) {
        return Rational(-n, -d);
    }
    return Rational(n, d);
}

Rational rat(long long n, long long d) {
    return rat(BigInt(n), BigInt(d));
}

bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

bool is_nonpositive_integer(const Rational& r) {
    return denominator(r) == 1 && numerator(r) <= 0;
}

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational acc(1);
    Rational factor = a;
    for (unsigned long i = 0; i < n; ++i) {
        if (factor == 0) {
            return Rational(0);
        }
        acc *= factor;
        ++factor;
    }
    return acc;
}

BigInt factorial(unsigned long n) {
    BigInt acc(1);
    for (unsigned long i = 2; i <= n; ++i) {
        acc *= i;
    }
    return acc;
}

double to_float(const Rational& r) {
    if (r == 0) {
        return 0.0;
    }
    BigInt num = numerator(r);
    const BigInt& den = denominator(r);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }

    // Scale to q/2^shift with q exactly 54 bits wide, remainder kept as the
    // sticky bit for the final rounding step.
    long shift = 54 - (long(msb(num)) - long(msb(den)));
    BigInt quot, rem;
    for (;;) {
        BigInt a = num;
        BigInt b = den;
        if (shift >= 0) {
            a <<= unsigned(shift);
        } else {
            b <<= unsigned(-shift);
        }
        divide_qr(a, b, quot, rem);
        if (quot == 0) {
            shift += 54;
            continue;
        }
        const long bits = long(msb(quot)) + 1;
        if (bits == 54) {
            break;
        }
        shift += 54 - bits;
    }

    // True value lies in [2^exp2, 2^(exp2+1)).
    const long exp2 = 53 - shift;
    long prec = 53;
    if (exp2 < -1022) {
        prec = exp2 + 1075;  // gradual underflow: leading bit down to 2^-1074
    }
    long cut = 54 - prec;
    if (cut > 55) {
        cut = 55;  // value is below half the smallest subnormal
    }

    const BigInt keep_floor = quot >> unsigned(cut);
    const BigInt dropped = quot - (keep_floor << unsigned(cut));
    const BigInt half = BigInt(1) << unsigned(cut - 1);
    BigInt keep = keep_floor;
    if (dropped > half || (dropped == half && (rem != 0 || bit_test(keep_floor, 0)))) {
        ++keep;
    }

    const double mantissa = keep.convert_to<double>();  // <= 2^53, exact
    const double result = std::ldexp(mantissa, int(cut - shift));
    if (std::isinf(result)) {
        throw Overflow("value exceeds double range");
    }
    return negative ? -result : result;
}

Rational parse_rational(std::string_view s) {
    const auto bad = [&]() -> InvalidSpec {
        return InvalidSpec("malformed rational '" + std::string(s) + "'");
    };
    const auto parse_int = [&](std::string_view t, bool allow_sign) -> BigInt {
        if (t.empty()) {
            throw bad();
        }
        size_t i = 0;
        bool neg = false;
        if (allow_sign && t[0] == '-') {
            neg = true;
            i = 1;
            if (t.size() == 1) {
                throw bad();
            }
        }
        BigInt v(0);
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
                throw bad();
            }
            v = v * 10 + (t[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };

    const size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s, true));
    }
    const BigInt p = parse_int(s.substr(0, slash), true);
    const BigInt q = parse_int(s.substr(slash + 1), false);
    return rat(p, q);
}

std::string format_rational(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += "/";
        out += denominator(r).str();
    }
    return out;
}

}  // namespace hyperred
