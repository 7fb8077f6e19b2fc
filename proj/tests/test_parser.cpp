#include <doctest.h>

#include <bkr/parser.hpp>

#include "oracles.hpp"

using namespace bkr;

namespace {

std::size_t error_offset(const char* src) {
  try {
    (void)parse_formula(src);
  } catch (const ParseError& e) {
    CHECK_FALSE(e.expected().empty());
    return e.offset();
  }
  FAIL("no parse error for " << src);
  return 0;
}

}  // namespace

TEST_CASE("formula examples") {
  const RawFormula f = parse_formula("x^2 - 2 = 0 /\\ 3*x > 0");
  CHECK(f == RawFormula::conj({RawFormula::atom(parse_poly("x^2 - 2"), RawRel::Eq),
                               RawFormula::atom(parse_poly("3x"), RawRel::Gt)}));
  CHECK(desugar(parse_formula("x < 1")) == RawFormula::atom(-parse_poly("x - 1"), RawRel::Gt));
  CHECK(parse_formula("x^2 > 2x") == RawFormula::atom(parse_poly("x^2 - 2x"), RawRel::Gt));
}

TEST_CASE("precedence") {
  const RawFormula f = parse_formula("x > 0 \\/ x < 0 /\\ x = 1");
  REQUIRE(f.kind == RawFormula::Kind::Or);
  CHECK(f.children[1].kind == RawFormula::Kind::And);
  const RawFormula g = parse_formula("~x > 0 /\\ x = 1");
  REQUIRE(g.kind == RawFormula::Kind::And);
  CHECK(g.children[0].kind == RawFormula::Kind::Not);
  const RawFormula h = parse_formula("~(x > 0 /\\ x = 1)");
  CHECK(h.kind == RawFormula::Kind::Not);
}

TEST_CASE("polynomial syntax") {
  CHECK(parse_poly("3x^3 + 2") == Poly({Rational(2), Rational(0), Rational(0), Rational(3)}));
  CHECK(parse_poly("-1/2*x") == Poly({Rational(0), Rational(-1, 2)}));
  CHECK(parse_poly("x - x") == Poly());
  CHECK(parse_poly("2/4") == Poly::constant(Rational(1, 2)));
  CHECK(parse_poly("x^2 \xE2\x88\x92 2") == parse_poly("x^2 - 2"));
  CHECK(parse_poly_list("x; x^2 - 1 ;3").size() == 3);
  CHECK(parse_poly_list("  ").empty());
}

TEST_CASE("errors carry offsets") {
  CHECK(error_offset("x^2") == 3);
  CHECK(error_offset("x > ") == 4);
  CHECK(error_offset("(x > 0") == 6);
  CHECK(error_offset("x >> 0") == 3);
  CHECK(error_offset("x > 0 /\\") == 8);
  CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^100001"), ParseError);
}

TEST_CASE("printing round-trips") {
  Rng rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    const RawFormula f = oracle::random_formula(rng, 1 + iter % 5, 4, 20);
    const std::string text = to_string(f);
    CAPTURE(text);
    CHECK(parse_formula(text) == f);
  }
}
