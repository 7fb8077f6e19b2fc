#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bkr {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation; values built from strings
/// go through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign sign_of_int(long v) noexcept {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

constexpr Sign operator-(Sign a) noexcept { return static_cast<Sign>(-to_int(a)); }

inline Sign sign(const Rational& r) { return sign_of_int(sgn(r)); }
inline Sign sign(const Integer& z) { return sign_of_int(sgn(z)); }

Rational make_rational(long num, long den = 1);

/// Parses "n" or "n/d" in base 10; the result is canonical.
Rational parse_rational(std::string_view text);

/// Bits needed for the larger of |numerator| and denominator.
std::size_t bitsize(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace bkr
