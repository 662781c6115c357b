#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kmw {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

/// Throws if the value is not an integer that fits in an int64.
std::int64_t to_int64(const Rational& value);
std::int64_t to_int64(const BigInt& value);

Rational floor_div(const Rational& value);  // floor
Rational ceil_of(const Rational& value);    // ceiling

using RationalVector = std::vector<Rational>;

}  // namespace kmw
