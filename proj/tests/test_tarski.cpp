#include <doctest.h>

#include <bkr/error.hpp>
#include <bkr/parser.hpp>
#include <bkr/tarski.hpp>

#include "oracles.hpp"

using namespace bkr;

namespace {

Poly P(const char* s) { return parse_poly(s); }

long oracle_query(const RootedPoly& rp, const Poly& q) {
  long n = 0;
  for (const auto& r : rp.roots) n += to_int(sign_at(q, r));
  return n;
}

}  // namespace

TEST_CASE("sign variations") {
  using S = std::vector<Sign>;
  CHECK(sign_variations(S{Sign::Positive, Sign::Positive, Sign::Negative}) == 1);
  CHECK(sign_variations(S{Sign::Positive}) == 0);
  CHECK(sign_variations(S{Sign::Positive, Sign::Negative, Sign::Positive, Sign::Negative}) == 3);
  CHECK(sign_variations(S{}) == 0);
  CHECK_THROWS_AS(sign_variations(S{Sign::Positive, Sign::Zero}), Error);
}

TEST_CASE("remainder sequence shape") {
  const auto seq = remainder_sequence(P("x^3 - x"), P("1"));
  REQUIRE(seq.polys.size() >= 2);
  CHECK(seq.polys[0] == P("x^3 - x"));
  CHECK(seq.degrees.front() == 3);
  CHECK(seq.polys.size() == seq.leading_signs.size());
  CHECK(seq.polys.size() == seq.degrees.size());
  for (const auto& p : seq.polys) CHECK_FALSE(p.is_zero());
  CHECK(remainder_sequence(P("x^2 + 1"), Poly()).polys.size() == 1);
}

TEST_CASE("tarski query examples") {
  QueryStats stats;
  CHECK(tarski_query(P("x^3 - x"), P("1"), stats) == 3);
  CHECK(tarski_query(P("x^3 - x"), P("3x^3 + 2"), stats) == 1);
  CHECK(tarski_query(P("x^2 + 1"), P("x"), stats) == 0);
  CHECK(stats.tarski_query_count == 3);

  const std::vector<Poly> qs{P("3x^3 + 2"), P("2x^2 - 1")};
  CHECK(tarski_query_subset(P("x^3 - x"), qs, {}, stats) == 3);
  CHECK(tarski_query_subset(P("x^3 - x"), qs, {1}, stats) == 1);
  CHECK(tarski_query_subset(P("x^3 - x"), qs, {0, 1}, stats) == -1);
  CHECK(stats.tarski_query_count == 6);
  CHECK_THROWS_AS(tarski_query_subset(P("x^3 - x"), qs, {2}, stats), Error);
  CHECK_THROWS_AS(tarski_query(Poly(), P("x"), stats), Error);
}

TEST_CASE("root counting") {
  QueryStats stats;
  CHECK(count_real_roots(P("x^3 - x"), stats) == 3);
  CHECK(count_real_roots(P("x^2 + 1"), stats) == 0);
  CHECK(count_real_roots(P("x^2 - 2x + 1"), stats) == 1);
  CHECK(stats.tarski_query_count == 3);
  CHECK(stats.max_intermediate_degree >= 3);
  CHECK(stats.max_coefficient_bitsize > 0);
}

TEST_CASE("query equals signed root count, including shared roots") {
  Rng rng(101);
  for (int iter = 0; iter < 300; ++iter) {
    const auto rp = random_rooted_poly(rng, 1 + iter % 6, 8, 3);
    std::uniform_int_distribution<std::size_t> deg(0, 5);
    Poly q = random_poly(rng, deg(rng), 10, 4);
    if (iter % 4 == 0) q = q * Poly::linear_factor(rp.roots.front());
    QueryStats stats;
    CHECK(tarski_query(rp.poly, q, stats) == oracle_query(rp, q));
    CHECK(tarski_query(rp.poly, Poly::constant(Rational(-3)) * q, stats) == -oracle_query(rp, q));
    CHECK(tarski_query(Poly::constant(Rational(5, 2)) * rp.poly, q, stats) == oracle_query(rp, q));
    CHECK(tarski_query(rp.poly * rp.poly, q, stats) == oracle_query(rp, q));
  }
}

TEST_CASE("query on irrational roots agrees with isolation") {
  Rng rng(5);
  for (int iter = 0; iter < 150; ++iter) {
    std::uniform_int_distribution<std::size_t> deg(1, 5);
    const Poly p = random_poly(rng, deg(rng), 12, 3);
    const Poly q = random_poly(rng, deg(rng), 12, 3);
    const Poly g = squarefree_part(p);
    long expected = 0;
    for (const auto& r : oracle::isolate_roots(g)) expected += to_int(oracle::sign_at_root(q, g, r));
    QueryStats stats;
    CHECK(tarski_query(p, q, stats) == expected);
  }
}

TEST_CASE("normalization does not change leading signs or degrees") {
  Rng rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    const Poly p = random_poly(rng, 1 + iter % 6, 20, 7);
    const Poly q = random_poly(rng, iter % 5, 20, 7);
    const auto a = remainder_sequence(p, q, true);
    const auto b = remainder_sequence(p, q, false);
    CHECK(a.leading_signs == b.leading_signs);
    CHECK(a.degrees == b.degrees);
  }
}

TEST_CASE("stats merge") {
  QueryStats a{3, 4, 10};
  const QueryStats b{2, 7, 5};
  a.merge(b);
  CHECK(a == QueryStats{5, 7, 10});
}
