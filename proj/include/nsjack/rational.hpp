#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace nsjack {

/// Exact rational scalar.  GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw ParameterError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" with decimal integers.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw ParameterError("malformed rational '" + s + "'");
    if (num.front() == '+')
        num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0)
        throw ParameterError("rational with zero denominator '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational pow(const Rational& base, long exponent)
{
    Rational result = 1;
    Rational b = base;
    if (exponent < 0) {
        if (b == 0)
            throw PoleError("zero raised to a negative power");
        b = 1 / b;
        exponent = -exponent;
    }
    while (exponent > 0) {
        if (exponent & 1)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Rising factorial x (x+1) ... (x+m-1).
inline Rational pochhammer(const Rational& x, long m)
{
    Rational r = 1;
    for (long i = 0; i < m; ++i)
        r *= x + i;
    return r;
}

inline Rational factorial(long m)
{
    Rational r = 1;
    for (long i = 2; i <= m; ++i)
        r *= i;
    return r;
}

} // namespace nsjack
