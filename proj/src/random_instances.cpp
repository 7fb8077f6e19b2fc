#include <bkr/random_instances.hpp>

#include <algorithm>

namespace bkr {

Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, std::max(1L, max_den));
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Poly random_poly(Rng& rng, std::size_t degree, long max_num, long max_den) {
  std::vector<Rational> coeffs(degree + 1);
  for (auto& c : coeffs) c = random_rational(rng, max_num, max_den);
  while (sgn(coeffs.back()) == 0) coeffs.back() = random_rational(rng, max_num, max_den);
  return Poly(std::move(coeffs));
}

RootedPoly random_rooted_poly(Rng& rng, std::size_t count, long max_num, long max_den) {
  RootedPoly out;
  while (out.roots.size() < count) {
    Rational r = random_rational(rng, max_num, max_den);
    if (std::find(out.roots.begin(), out.roots.end(), r) == out.roots.end()) out.roots.push_back(r);
  }
  std::sort(out.roots.begin(), out.roots.end());
  Rational lead = 0;
  while (sgn(lead) == 0) lead = random_rational(rng, 5, 3);
  out.poly = Poly::constant(lead);
  for (const auto& r : out.roots) out.poly = out.poly * Poly::linear_factor(r);
  return out;
}

Poly random_poly_avoiding(Rng& rng, const std::vector<Rational>& roots, std::size_t max_degree, long max_num,
                          long max_den) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  for (;;) {
    Poly q = random_poly(rng, deg(rng), max_num, max_den);
    if (std::none_of(roots.begin(), roots.end(), [&](const Rational& r) { return sign_at(q, r) == Sign::Zero; })) {
      return q;
    }
  }
}

}  // namespace bkr
