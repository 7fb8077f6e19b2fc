#include <doctest.h>

#include <bkr/error.hpp>
#include <bkr/parser.hpp>
#include <bkr/sign_determination.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace bkr;

namespace {

Poly P(const char* s) { return parse_poly(s); }

constexpr Sign kP = Sign::Positive;
constexpr Sign kN = Sign::Negative;

const Mat kH{{1, 1}, {1, -1}};

std::set<SignAssignment> as_set(const std::vector<SignAssignment>& v) { return {v.begin(), v.end()}; }

SignDetSystem base_system() { return {kH, {{}, {0}}, {{kP}, {kN}}}; }

}  // namespace

TEST_CASE("build_matrix") {
  const std::vector<IndexSubset> s1{{}, {0}};
  const std::vector<SignAssignment> g1{{kP}, {kN}};
  CHECK(build_matrix(s1, g1) == kH);
  const std::vector<IndexSubset> s2{{}};
  const std::vector<SignAssignment> g2{{kN}};
  CHECK(build_matrix(s2, g2) == Mat{{1}});
  const std::vector<IndexSubset> s4{{}, {1}, {0}, {0, 1}};
  const std::vector<SignAssignment> g4{{kP, kP}, {kP, kN}, {kN, kP}, {kN, kN}};
  CHECK(build_matrix(s4, g4) == kronecker(kH, kH));
}

TEST_CASE("build_rhs") {
  QueryStats stats;
  const std::vector<Poly> q1{P("3x^3 + 2")};
  const std::vector<IndexSubset> s1{{}, {0}};
  CHECK(build_rhs(P("x^3 - x"), q1, s1, stats) == Vec{3, 1});
  const std::vector<Poly> q2{P("3x^3 + 2"), P("2x^2 - 1")};
  const std::vector<IndexSubset> s4{{}, {1}, {0}, {0, 1}};
  CHECK(build_rhs(P("x^3 - x"), q2, s4, stats) == Vec{3, 1, 1, -1});
  const std::vector<Poly> q3{P("x")};
  CHECK(build_rhs(P("x^2 + 1"), q3, s1, stats) == Vec{0, 0});
  CHECK(stats.tarski_query_count == 8);
}

TEST_CASE("solve_w") {
  CHECK(solve_w(base_system(), Vec{3, 1}) == Vec{2, 1});
  const SignDetSystem four = combine_systems(base_system(), 1, base_system());
  CHECK(solve_w(four, Vec{3, 1, 1, -1}) == Vec{1, 1, 1, 0});
  CHECK(solve_w(SignDetSystem{}, Vec{}).empty());
  CHECK_THROWS_AS(solve_w(base_system(), Vec{2, 1}), Error);
  CHECK_THROWS_AS(solve_w(base_system(), Vec{-1, 1}), Error);
}

TEST_CASE("base case") {
  QueryStats stats;
  const SignDetSystem a = base_case(P("x^3 - x"), P("3x^3 + 2"), stats);
  CHECK(a.signs == std::vector<SignAssignment>{{kP}, {kN}});
  CHECK(a.matrix == kH);
  CHECK(stats.tarski_query_count == 2);

  const SignDetSystem b = base_case(P("x^2 + 1"), P("x"), stats);
  CHECK(b.signs.empty());
  CHECK(b.subsets.empty());
  CHECK(b.matrix.rows() == 0);

  const SignDetSystem c = base_case(P("x - 1"), P("x"), stats);
  CHECK(c.signs == std::vector<SignAssignment>{{kP}});
  CHECK(c.subsets == std::vector<IndexSubset>{{}});
  CHECK(c.matrix == Mat{{1}});
}

TEST_CASE("combine") {
  const SignDetSystem c = combine_systems(base_system(), 1, base_system());
  CHECK(c.subsets == std::vector<IndexSubset>{{}, {1}, {0}, {0, 1}});
  CHECK(c.signs == std::vector<SignAssignment>{{kP, kP}, {kP, kN}, {kN, kP}, {kN, kN}});
  CHECK(c.matrix == kronecker(kH, kH));
  const SignDetSystem e = combine_systems(base_system(), 1, SignDetSystem{});
  CHECK(e.signs.empty());
  CHECK(e.matrix.rows() == 0);
}

TEST_CASE("reduce") {
  QueryStats stats;
  const std::vector<Poly> qs{P("3x^3 + 2"), P("2x^2 - 1")};
  const SignDetSystem r = reduce_system(P("x^3 - x"), qs, combine_systems(base_system(), 1, base_system()), stats);
  CHECK(r.signs == std::vector<SignAssignment>{{kP, kP}, {kP, kN}, {kN, kP}});
  CHECK(r.matrix.rows() == 3);
  CHECK(r.matrix.cols() == 3);
  CHECK(rank(r.matrix) == 3);
  CHECK(r.matrix == build_matrix(r.subsets, r.signs));
  CHECK(stats.tarski_query_count == 4);

  const std::vector<Poly> q1{P("3x^3 + 2")};
  const SignDetSystem same = reduce_system(P("x^3 - x"), q1, base_system(), stats);
  CHECK(same.signs == base_system().signs);
  CHECK(same.matrix == kH);

  const std::vector<Poly> q2{P("x")};
  CHECK(reduce_system(P("x^2 + 1"), q2, base_system(), stats).signs.empty());
}

TEST_CASE("calc_data and find_consistent_signs_at_roots") {
  QueryStats stats;
  const std::vector<Poly> qs{P("3x^3 + 2"), P("2x^2 - 1")};
  const SignDetSystem sys = calc_data(P("x^3 - x"), qs, stats);
  CHECK(as_set(sys.signs) == std::set<SignAssignment>{{kP, kP}, {kP, kN}, {kN, kP}});
  CHECK(stats.tarski_query_count == 8);

  const SignDetSystem none = calc_data(P("x^3 - x"), std::vector<Poly>{}, stats);
  CHECK(none.signs == std::vector<SignAssignment>{{}});
  CHECK(calc_data(P("x^2 + 1"), std::vector<Poly>{}, stats).signs.empty());
  const std::vector<Poly> qx{P("x")};
  CHECK(calc_data(P("x^2 + 1"), qx, stats).signs.empty());

  const std::vector<Poly> q1{P("3x^3 + 2")};
  CHECK(find_consistent_signs_at_roots(P("x^3 - x"), q1, stats) == std::vector<SignAssignment>{{kP}, {kN}});
  const std::vector<Poly> q3{P("x"), P("x + 1")};
  CHECK(find_consistent_signs_at_roots(P("x - 1"), q3, stats) == std::vector<SignAssignment>{{kP, kP}});

  const std::vector<Poly> shared{P("x - 1")};
  CHECK_THROWS_AS(calc_data(P("x^3 - x"), shared, stats), Error);
}

TEST_CASE("naive method") {
  const std::vector<Poly> qs{P("3x^3 + 2"), P("2x^2 - 1")};
  QueryStats s2;
  CHECK(as_set(naive_find_consistent_signs_at_roots(P("x^3 - x"), qs, s2)) ==
        std::set<SignAssignment>{{kP, kP}, {kP, kN}, {kN, kP}});
  CHECK(s2.tarski_query_count == 4);

  QueryStats s1;
  const std::vector<Poly> q1{P("3x^3 + 2")};
  CHECK(naive_find_consistent_signs_at_roots(P("x^3 - x"), q1, s1) == std::vector<SignAssignment>{{kP}, {kN}});
  CHECK(s1.tarski_query_count == 2);

  QueryStats s0;
  CHECK(naive_find_consistent_signs_at_roots(P("x^3 - x"), std::vector<Poly>{}, s0) ==
        std::vector<SignAssignment>{{}});
  CHECK(naive_find_consistent_signs_at_roots(P("x^2 + 1"), std::vector<Poly>{}, s0).empty());
  CHECK(s0.tarski_query_count == 2);

  SignDetOptions opts;
  opts.naive_limit = 1;
  CHECK_THROWS_AS(naive_find_consistent_signs_at_roots(P("x^3 - x"), qs, s0, opts), Error);
}

TEST_CASE("naive enumeration is the Kronecker power") {
  Mat h = Mat{{1}};
  Rng rng(1);
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto subsets = all_subsets(n);
    const auto signs = all_sign_candidates(n);
    CHECK(subsets.size() == (std::size_t{1} << n));
    CHECK(build_matrix(subsets, signs) == h);
    Vec v(subsets.size());
    for (auto& x : v) x = oracle::random_matrix(rng, 1, 1, 9)(0, 0);
    CHECK(solve_kronecker_power(v) == mat_vec(invert(h), v));
    h = kronecker(h, kH);
  }
}

TEST_CASE("random instances match direct evaluation and satisfy the stage invariants") {
  Rng rng(29);
  for (int iter = 0; iter < 120; ++iter) {
    const auto rp = random_rooted_poly(rng, 1 + iter % 6, 10, 3);
    std::vector<Poly> qs;
    const std::size_t n = iter % 6;
    for (std::size_t i = 0; i < n; ++i) qs.push_back(random_poly_avoiding(rng, rp.roots, 4, 10, 3));

    std::size_t observed = 0;
    std::uint64_t expected_queries = n == 0 ? 1 : 0;
    SignDetOptions opts;
    opts.observer = [&](Stage stage, const Poly& p, std::span<const Poly> sub, const SignDetSystem& sys) {
      ++observed;
      if (stage == Stage::Base) expected_queries += 2;
      if (stage == Stage::Combine) expected_queries += sys.subsets.size();
      CHECK(sys.matrix == build_matrix(sys.subsets, sys.signs));
      CHECK(rank(sys.matrix) == sys.signs.size());
      CHECK(sys.matrix.rows() == sys.signs.size());
      CHECK(as_set(sys.signs).size() == sys.signs.size());
      const std::vector<Poly> subv(sub.begin(), sub.end());
      const auto truth = oracle::signs_at_points(subv, rp.roots);
      const auto found = as_set(sys.signs);
      for (const auto& t : truth) CHECK(found.count(t) == 1);
      if (stage == Stage::Reduce) {
        CHECK(found == as_set(truth));
        CHECK(sys.signs.size() <= *p.degree());
      }
      QueryStats scratch;
      const Vec w = oracle::root_count_vector(sub, rp.roots, sys.signs);
      CHECK(mat_vec(sys.matrix, w) == build_rhs(p, sub, sys.subsets, scratch));
    };

    QueryStats bkr_stats, naive_stats;
    const auto bkr = find_consistent_signs_at_roots(rp.poly, qs, bkr_stats, opts);
    const auto naive = naive_find_consistent_signs_at_roots(rp.poly, qs, naive_stats);
    const auto truth = oracle::signs_at_points(qs, rp.roots);
    CHECK(as_set(bkr) == as_set(truth));
    CHECK(as_set(naive) == as_set(truth));
    CHECK(naive_stats.tarski_query_count == (std::uint64_t{1} << n));
    CHECK(bkr_stats.tarski_query_count == expected_queries);
    if (n > 0) CHECK(observed > 0);
  }
}
