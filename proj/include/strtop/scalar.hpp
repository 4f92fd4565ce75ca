#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strtop {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading minus, q > 0). Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// Parity of an integer degree, safe for negative values.
inline bool is_odd(long degree) { return (degree % 2) != 0; }

/// (-1)^(p*q) for integer degrees.
inline int koszul_sign(long p, long q) { return (is_odd(p) && is_odd(q)) ? -1 : 1; }

}  // namespace strtop
