#pragma once

#include <bkr/poly.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace bkr {

using Rng = std::mt19937_64;

/// Uniform numerator in [-max_num, max_num], denominator in [1, max_den].
Rational random_rational(Rng& rng, long max_num, long max_den);

/// Polynomial of exactly `degree` with random coefficients and nonzero lead.
Poly random_poly(Rng& rng, std::size_t degree, long max_num, long max_den);

struct RootedPoly {
  Poly poly;
  /// Distinct, ascending.
  std::vector<Rational> roots;
};

/// c * prod (x - r) over `count` distinct random rational roots, c a random
/// nonzero rational.
RootedPoly random_rooted_poly(Rng& rng, std::size_t count, long max_num, long max_den);

/// Random polynomial of degree <= max_degree that is nonzero at every given
/// root (hence coprime with any polynomial whose real roots those are, when
/// that polynomial splits over the rationals).
Poly random_poly_avoiding(Rng& rng, const std::vector<Rational>& roots, std::size_t max_degree, long max_num,
                          long max_den);

}  // namespace bkr
