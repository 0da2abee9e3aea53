#pragma once

// Exact rationals for the whole library. Everything downstream works over Q;
// there is no floating point anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympleib {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Surrounding whitespace is not accepted.
inline Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("not a rational: \"" + std::string(text) + "\""); };
    if (text.empty())
        throw bad();
    std::size_t slash = text.find('/');
    auto check_int = [&](std::string_view s, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            start = 1;
        if (start == s.size())
            throw bad();
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw bad();
    };
    if (slash == std::string_view::npos) {
        check_int(text, true);
    } else {
        check_int(text.substr(0, slash), true);
        check_int(text.substr(slash + 1), false);
    }
    std::string s(text);
    if (s[0] == '+')
        s.erase(0, 1);
    Rational r;
    if (slash == std::string_view::npos) {
        r = mpz_class(s);
    } else {
        std::size_t sl = s.find('/');
        mpz_class num(s.substr(0, sl));
        mpz_class den(s.substr(sl + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
        r = Rational(num, den);
        r.canonicalize();
    }
    return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

inline Rational half()
{
    return Rational(1, 2);
}

} // namespace sympleib
