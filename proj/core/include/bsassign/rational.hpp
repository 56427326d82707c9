#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace bsassign {

// Exact arbitrary-precision rationals; GMP keeps values canonical
// (gcd(num, den) = 1, den > 0) under arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }

/// Parses "n" or "n/d" (base 10). Throws std::invalid_argument on bad input.
Rational rational_from_string(const std::string& text);

/// Renders as "n" or "n/d".
std::string to_string(const Rational& q);

/// Integer value if the mpz fits in int64, otherwise nullopt.
std::optional<std::int64_t> to_int64(const Integer& z);

}  // namespace bsassign
