#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace sl2wt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a documented precondition is violated.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    return Rational(num, den);
}

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q".  Throws domain_error on malformed input.
Rational parse_rational(const std::string& s);

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// r is in Z + 1/2 (proper half-integer).
inline bool is_half_odd(const Rational& r) { return denominator(r) == 2; }

/// Floor of a rational, as Integer.
Integer rat_floor(const Rational& r);

/// Crude size measure used for pivot selection in exact elimination.
std::size_t rat_complexity(const Rational& r);

std::size_t rat_hash(const Rational& r);

} // namespace sl2wt
