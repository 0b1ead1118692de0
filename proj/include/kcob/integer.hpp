#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kcob {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer of any length.
/// Throws std::invalid_argument on anything else (including empty input).
Integer parse_integer(std::string_view text);

/// Narrowing with a range check; throws std::out_of_range.
std::int64_t to_int64(const Integer& value);
std::uint64_t to_uint64(const Integer& value);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Ceiling / floor of a / b for b != 0.
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);

/// Deterministic for the 64-bit range (GMP runs BPSW there).
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace kcob
