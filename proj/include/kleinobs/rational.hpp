#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace kleinobs {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator) as long as every constructor path calls
/// canonicalize(); make_scalar() does.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(long num, long den = 1);

/// Parses "a", "-a", "a/b", "-a/b". Anything else (decimals, exponents,
/// zero denominators) yields nullopt.
std::optional<Scalar> parse_scalar(std::string_view text);

/// Canonical text: "0", "-3/2", "7".
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

} // namespace kleinobs
