#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace deriv {

using Int = boost::multiprecision::cpp_int;

// Exact rational with invariants gcd(|num|,den)=1, den >= 1 maintained by
// the backend. Equality is value equality.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "3", "-3", "3/2". Canonical: no denominator printed when it is 1.
std::string to_string(const Rational& q);

std::optional<Rational> rational_from_string(std::string_view s);

}  // namespace deriv
