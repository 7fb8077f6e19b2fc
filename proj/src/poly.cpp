#include <bkr/error.hpp>
#include <bkr/poly.hpp>

#include <algorithm>
#include <sstream>

namespace bkr {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Poly::nonzero_degree() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPoly, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading_coeff() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPoly, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly negate(const Poly& a) { return -a; }

Poly pow(const Poly& a, unsigned k) {
  Poly result = Poly::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Sign sign_at(const Poly& p, const Rational& x) { return sign(eval(p, x)); }

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "divmod by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (r.size() <= db) return {Poly(), a};
  std::vector<Rational> q(r.size() - db);
  const Rational lead_inv = 1 / b.leading_coeff();
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    const Rational factor = r[k] * lead_inv;
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= factor * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::Internal, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return rem(a, d).is_zero(); }

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.leading_coeff()) * p;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  Poly u = primitive_part(a);
  Poly v = primitive_part(b);
  while (!v.is_zero()) {
    Poly r = primitive_part(rem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return monic(u);
}

Poly derivative(const Poly& p) {
  if (p.is_constant()) return {};
  std::vector<Rational> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return Poly(std::move(out));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPoly, "squarefree part of the zero polynomial");
  if (p.is_constant()) return Poly::constant(Rational(1));
  return monic(exact_div(p, gcd(p, derivative(p))));
}

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / content(p)) * p;
}

Integer crb(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPoly, "root bound of the zero polynomial");
  if (p.is_constant()) throw Error(Errc::ConstantPoly, "root bound of a constant polynomial");
  const auto& c = p.coeffs();
  const Rational lead = abs(c.back());
  Rational biggest(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) biggest = std::max(biggest, Rational(abs(c[i]) / lead));
  const Rational cauchy = 1 + biggest;
  Integer floored;
  mpz_fdiv_q(floored.get_mpz_t(), cauchy.get_num_mpz_t(), cauchy.get_den_mpz_t());
  return floored + 1;
}

Poly product(std::span<const Poly> ps) {
  Poly out = Poly::constant(Rational(1));
  for (const auto& p : ps) out = out * p;
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const Rational mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << '-';
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

bool canonical_less(const Poly& a, const Poly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  for (std::size_t k = ca.size(); k-- > 0;) {
    if (ca[k] != cb[k]) return ca[k] < cb[k];
  }
  return false;
}

}  // namespace bkr
