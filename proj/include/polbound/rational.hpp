#pragma once

// Exact arithmetic used throughout the library. Rationals are always kept in
// lowest terms with a positive denominator, so the canonical text form "p/q"
// is unique for every value.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "polbound/error.hpp"

namespace polbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw InvalidInput("zero denominator");
    }
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Greatest integer not exceeding q.
inline Integer floor_of(const Rational& q) {
    const Integer num = numerator_of(q);
    const Integer den = denominator_of(q);
    Integer quot = num / den; // truncates toward zero
    if (num < 0 && quot * den != num) {
        --quot;
    }
    return quot;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

/// Canonical "p/q" rendering; the denominator is always printed, even when it is 1.
inline std::string to_string(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::int64_t to_int64(const Integer& z, std::string_view what) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
        throw InvalidInput(std::string(what) + " does not fit in a 64-bit integer");
    }
    return z.convert_to<std::int64_t>();
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    Integer value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parses "p/q" or an integer literal. No whitespace, no locale dependence.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(text, text));
    }
    const Integer num = detail::parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    return make_rational(num, detail::parse_integer(den_text, text));
}

inline std::int64_t parse_int64(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw InvalidInput("malformed integer '" + std::string(text) + "'");
    }
    return value;
}

} // namespace polbound
