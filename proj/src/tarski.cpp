#include <bkr/error.hpp>
#include <bkr/tarski.hpp>

#include <algorithm>
#include <string>

namespace bkr {

void QueryStats::merge(const QueryStats& other) noexcept {
  tarski_query_count += other.tarski_query_count;
  max_intermediate_degree = std::max(max_intermediate_degree, other.max_intermediate_degree);
  max_coefficient_bitsize = std::max(max_coefficient_bitsize, other.max_coefficient_bitsize);
}

RemainderSequence remainder_sequence(const Poly& p, const Poly& q, bool normalize) {
  if (p.is_zero()) throw Error(Errc::ZeroPoly, "remainder sequence of the zero polynomial");
  RemainderSequence seq;
  auto push = [&](Poly next) {
    seq.leading_signs.push_back(sign(next.leading_coeff()));
    seq.degrees.push_back(next.nonzero_degree());
    seq.polys.push_back(std::move(next));
  };
  auto norm = [&](const Poly& a) { return normalize ? primitive_part(a) : a; };

  push(norm(p));
  Poly second = norm(derivative(p) * q);
  if (second.is_zero()) return seq;
  push(std::move(second));
  for (;;) {
    const auto n = seq.polys.size();
    Poly next = norm(-rem(seq.polys[n - 2], seq.polys[n - 1]));
    if (next.is_zero()) break;
    push(std::move(next));
  }
  return seq;
}

std::size_t sign_variations(std::span<const Sign> signs) {
  std::size_t flips = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == Sign::Zero) throw Error(Errc::ZeroEntry, "zero at position " + std::to_string(i));
    if (i > 0 && signs[i] != signs[i - 1]) ++flips;
  }
  return flips;
}

long tarski_query(const Poly& p, const Poly& q, QueryStats& stats) {
  if (p.is_zero()) throw Error(Errc::ZeroPoly, "Tarski query with p = 0");
  const RemainderSequence seq = remainder_sequence(p, q);

  std::vector<Sign> at_minus_inf(seq.leading_signs.size());
  for (std::size_t i = 0; i < seq.leading_signs.size(); ++i) {
    at_minus_inf[i] = seq.degrees[i] % 2 == 0 ? seq.leading_signs[i] : -seq.leading_signs[i];
  }
  const auto s_plus = static_cast<long>(sign_variations(seq.leading_signs));
  const auto s_minus = static_cast<long>(sign_variations(at_minus_inf));

  ++stats.tarski_query_count;
  for (const auto& poly : seq.polys) {
    stats.max_intermediate_degree = std::max(stats.max_intermediate_degree, poly.nonzero_degree());
    for (const auto& c : poly.coeffs()) {
      stats.max_coefficient_bitsize = std::max(stats.max_coefficient_bitsize, bitsize(c));
    }
  }
  return s_minus - s_plus;
}

long tarski_query_subset(const Poly& p, std::span<const Poly> qs, const IndexSubset& subset, QueryStats& stats) {
  Poly q = Poly::constant(Rational(1));
  for (const auto i : subset) {
    if (i >= qs.size()) {
      throw Error(Errc::IndexOutOfRange, "subset index " + std::to_string(i) + " with " +
                                             std::to_string(qs.size()) + " polynomials");
    }
    q = q * qs[i];
  }
  return tarski_query(p, q, stats);
}

std::size_t count_real_roots(const Poly& p, QueryStats& stats) {
  return static_cast<std::size_t>(tarski_query(p, Poly::constant(Rational(1)), stats));
}

}  // namespace bkr
