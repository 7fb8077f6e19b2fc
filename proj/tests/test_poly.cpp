#include <doctest.h>

#include <bkr/error.hpp>
#include <bkr/parser.hpp>
#include <bkr/poly.hpp>
#include <bkr/random_instances.hpp>

#include "oracles.hpp"

using namespace bkr;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
  CHECK(Poly().is_zero());
  CHECK_FALSE(Poly().degree().has_value());
  CHECK(Poly({Rational(1), Rational(0), Rational(0)}) == Poly::constant(Rational(1)));
  CHECK(*P("x^3 - x").degree() == 3);
  CHECK(P("7").is_constant());
  CHECK(code_of([] { (void)Poly().nonzero_degree(); }) == Errc::ZeroPoly);
  CHECK(Poly::linear_factor(Rational(2)) == P("x - 2"));
}

TEST_CASE("arithmetic examples") {
  CHECK(mul(P("x - 1"), P("x + 1")) == P("x^2 - 1"));
  const Poly p = P("3x^3 - 1/2x + 4");
  CHECK(add(p, Poly()) == p);
  CHECK(mul(p, Poly()).is_zero());
  CHECK(negate(p) + p == Poly());
  CHECK(pow(P("x + 1"), 3) == P("x^3 + 3x^2 + 3x + 1"));
}

TEST_CASE("evaluation and signs") {
  CHECK(eval(P("x^2 - 2"), Rational(0)) == -2);
  CHECK(eval(P("x^2 - 2"), Rational(2)) == 2);
  CHECK(eval(P("3x^3 + 2"), Rational(-1)) == -1);
  CHECK(sign_at(P("3x^3 + 2"), Rational(0)) == Sign::Positive);
  CHECK(sign_at(P("x - 1"), Rational(1)) == Sign::Zero);
  CHECK(sign_at(P("2x^2 - 1"), Rational(0)) == Sign::Negative);
}

TEST_CASE("division examples") {
  auto [q1, r1] = divmod(P("x^2 - 1"), P("x - 1"));
  CHECK(q1 == P("x + 1"));
  CHECK(r1.is_zero());
  auto [q2, r2] = divmod(P("x"), P("x^2"));
  CHECK(q2.is_zero());
  CHECK(r2 == P("x"));
  auto [q3, r3] = divmod(P("x^3 - x"), P("3x^2 - 1"));
  CHECK(q3 == P("1/3x"));
  CHECK(r3 == P("-2/3x"));
  CHECK(code_of([] { (void)divmod(P("x"), Poly()); }) == Errc::DivisionByZeroPoly);
  CHECK(exact_div(P("x^2 - 1"), P("x + 1")) == P("x - 1"));
  CHECK(code_of([] { (void)exact_div(P("x^2"), P("x + 1")); }) == Errc::Internal);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P("x^2 - 1"), P("x - 1")) == P("x - 1"));
  CHECK(gcd(P("x^2 - 1"), P("1")) == P("1"));
  CHECK(gcd(P("x^2 - 2"), P("3x")) == P("1"));
  CHECK(gcd(Poly(), P("2x + 4")) == P("x + 2"));
  CHECK(code_of([] { (void)gcd(Poly(), Poly()); }) == Errc::BothZero);
}

TEST_CASE("derivative and squarefree part") {
  CHECK(derivative(P("x^3 - x")) == P("3x^2 - 1"));
  CHECK(derivative(P("5")).is_zero());
  CHECK(derivative(P("2x^2 - 1")) == P("4x"));
  CHECK(squarefree_part(P("x^2")) == P("x"));
  CHECK(squarefree_part(P("x^2 - 2")) == P("x^2 - 2"));
  CHECK(squarefree_part(P("x - 1") * P("x - 1") * P("x + 1")) == P("x^2 - 1"));
  CHECK(squarefree_part(P("3")) == P("1"));
  CHECK(code_of([] { (void)squarefree_part(Poly()); }) == Errc::ZeroPoly);
}

TEST_CASE("cauchy root bound") {
  CHECK(crb(P("x^2 - 2")) == 4);
  CHECK(crb(P("x")) == 2);
  CHECK(crb(P("x^3 - x")) == 3);
  CHECK(crb(P("x - 1")) == 3);
  CHECK(code_of([] { (void)crb(P("4")); }) == Errc::ConstantPoly);
  CHECK(code_of([] { (void)crb(Poly()); }) == Errc::ZeroPoly);
}

TEST_CASE("content and printing") {
  CHECK(content(P("2/3x^2 + 4/9")) == Rational(2, 9));
  CHECK(primitive_part(P("2/3x^2 + 4/9")) == P("3x^2 + 2"));
  CHECK(monic(P("3x - 6")) == P("x - 2"));
  CHECK(to_string(P("3x^3 + 2")) == "3*x^3 + 2");
  CHECK(to_string(P("-1/2x")) == "-1/2*x");
  CHECK(to_string(P("x^2 - 2")) == "x^2 - 2");
  CHECK(to_string(Poly()) == "0");
}

TEST_CASE("division, gcd and bound properties on random input") {
  Rng rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<std::size_t> deg(0, 6);
    const Poly a = random_poly(rng, deg(rng), 9, 4);
    const Poly b = random_poly(rng, deg(rng), 9, 4);
    const Poly c = random_poly(rng, deg(rng), 9, 4);

    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || *r.degree() < *b.degree()));

    const Poly g = gcd(a * c, b * c);
    CHECK(divides(g, a * c));
    CHECK(divides(g, b * c));
    CHECK(divides(monic(c), g));
    CHECK(sgn(g.leading_coeff()) > 0);
    CHECK(g.leading_coeff() == 1);

    CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    CHECK(derivative(a + b) == derivative(a) + derivative(b));

    const Poly sq = a * a * b;
    if (!sq.is_constant()) {
      const Poly s = squarefree_part(sq);
      CHECK(gcd(s, derivative(s)).is_constant());
      CHECK(divides(s, sq));
      CHECK(divides(s, squarefree_part(a) * squarefree_part(b)));

      const Integer bound = crb(sq);
      for (const auto& root : oracle::isolate_roots(s)) {
        CHECK(Rational(-bound) < root.lo);
        CHECK(root.hi < Rational(bound));
      }
      const Rational wide = Rational(bound) * 1000;
      CHECK(oracle::sturm_count(s, Rational(-bound), Rational(bound)) == oracle::sturm_count(s, -wide, wide));
      CHECK(sign_at(sq, Rational(bound)) != Sign::Zero);
      CHECK(sign_at(sq, Rational(-bound)) != Sign::Zero);
    }
  }
}

TEST_CASE("rooted polynomials vanish exactly at their roots") {
  Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const auto rp = random_rooted_poly(rng, 1 + iter % 6, 10, 4);
    CHECK(*rp.poly.degree() == rp.roots.size());
    for (const auto& r : rp.roots) CHECK(sign_at(rp.poly, r) == Sign::Zero);
    CHECK(oracle::isolate_roots(rp.poly).size() == rp.roots.size());
  }
}
