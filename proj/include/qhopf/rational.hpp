#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qhopf/error.hpp"

namespace qhopf {

/// Exact rational number. mpq_class keeps the denominator positive and the
/// fraction reduced after every arithmetic operation; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text; "/q" is omitted when q = 1.
inline std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw Error(ErrorCode::ParseError, "empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' && !seen_slash && digit_before) {
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw Error(ErrorCode::ParseError, "bad rational syntax: '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw Error(ErrorCode::ParseError, "bad rational syntax: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw Error(ErrorCode::ParseError, "bad rational syntax: '" + s + "'");
    if (r.get_den() == 0)
        throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace qhopf
