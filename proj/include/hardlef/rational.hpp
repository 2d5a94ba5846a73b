#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>

#include "hardlef/errors.hpp"

namespace hardlef {

/// Exact rational scalar. Arbitrary precision, always in lowest terms,
/// denominator > 0. No floating point is used anywhere in this project.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "p" or "p/q" with an optional leading sign. Anything else is
/// rejected; in particular floats and embedded whitespace are errors.
inline Rational parse_rational(std::string_view s) {
    const std::string text(s);
    std::size_t pos = 0;
    auto fail = [&]() -> void {
        throw InputError("invalid rational literal: \"" + text + "\" (expected p or p/q)");
    };
    auto read_int = [&](bool allow_sign) -> BigInt {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) fail();
        return BigInt(text.substr(start, pos - start));
    };
    if (text.empty()) fail();
    BigInt num = read_int(true);
    BigInt den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        den = read_int(false);
        if (pos != text.size()) fail();
        if (den == 0) throw InputError("invalid rational literal: \"" + text + "\" (zero denominator)");
    }
    return Rational(num, den);
}

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hardlef
