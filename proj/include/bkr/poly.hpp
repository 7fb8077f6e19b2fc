#pragma once

#include <bkr/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bkr {

/// Degree of a polynomial. The zero polynomial has no degree (nullopt),
/// which compares below every natural degree.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is always nonzero and
/// the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// x - root
  static Poly linear_factor(const Rational& root);
  /// The monomial c * x^k.
  static Poly monomial(const Rational& c, std::size_t k);
  static Poly x() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  [[nodiscard]] Degree degree() const noexcept;
  /// Degree for callers that have already excluded the zero polynomial.
  [[nodiscard]] std::size_t nonzero_degree() const;
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the end.
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const Rational& leading_coeff() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend Poly operator-(const Poly& a);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly negate(const Poly& a);
Poly pow(const Poly& a, unsigned k);

Rational eval(const Poly& p, const Rational& x);
Sign sign_at(const Poly& p, const Rational& x);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
/// Exact quotient; throws Errc::Internal when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
/// Monic polynomial with the same roots as p, each simple.
Poly squarefree_part(const Poly& p);
/// p divided by its leading coefficient.
Poly monic(const Poly& p);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const Poly& p);
/// p / content(p): integer coefficients, same sign everywhere as p.
Poly primitive_part(const Poly& p);

/// Integer strictly larger than the magnitude of every real root of p:
/// floor(1 + max_{i<n} |a_i / a_n|) + 1.
Integer crb(const Poly& p);

Poly product(std::span<const Poly> ps);

/// Prints in the formula-input syntax, e.g. "3*x^3 + 2" or "-1/2*x".
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Canonical total order on polynomials (degree, then coefficients from the
/// top). Used for deterministic basis ordering.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace bkr
