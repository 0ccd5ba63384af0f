#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace symtau {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(sqrt(n)) for n >= 0; throws std::invalid_argument on negative input.
BigInt isqrt_floor(const BigInt& n);

// The exact integer square root, or nullopt when n is not a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n);

bool is_integer(const Rational& q);

// Canonical text form: "5", "-7/3".  Denominator printed only when != 1.
std::string rational_str(const Rational& q);

// Parses the canonical form above (optional sign, optional "/denominator").
// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace symtau
