#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cedual {

// Exact rational. GMP keeps mpq_class canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign, decimal digits only).
/// Returns nullopt on malformed input or a zero denominator.
std::optional<Scalar> parse_scalar(std::string_view text);

/// Canonical text form: "p/q", or "p" when q = 1. Sign sits on the numerator.
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

/// p-adic valuation. Undefined for zero (throws std::domain_error).
long valuation(const Scalar& x, unsigned long p);
long valuation(const Integer& x, unsigned long p);

/// |x|_p = p^{-v_p(x)}, with |0|_p = 0.
Scalar padic_abs(const Scalar& x, unsigned long p);

/// x^e for any integer exponent (x must be nonzero when e < 0).
Scalar power(const Scalar& x, long e);

bool is_prime(unsigned long n);

/// True iff n = p^k for some k >= 1.
bool is_power_of(unsigned long n, unsigned long p);

std::uint64_t binomial(unsigned n, unsigned k);

} // namespace cedual
