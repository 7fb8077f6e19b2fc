#pragma once

#include <bkr/poly.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bkr {

/// Sorted, duplicate-free 0-based indices into a polynomial list.
using IndexSubset = std::vector<std::size_t>;

/// Per-run counters. Each concurrent branch owns one; merge() joins them.
struct QueryStats {
  std::uint64_t tarski_query_count = 0;
  std::size_t max_intermediate_degree = 0;
  std::size_t max_coefficient_bitsize = 0;

  void merge(const QueryStats& other) noexcept;
  friend bool operator==(const QueryStats&, const QueryStats&) = default;
};

/// Signed remainder sequence p_1 = p, p_2 = p' q, p_i = -(p_{i-2} mod p_{i-1}),
/// stopped before the first zero remainder.
struct RemainderSequence {
  std::vector<Poly> polys;
  std::vector<Sign> leading_signs;
  std::vector<std::size_t> degrees;
};

/// With `normalize`, every entry is divided by its (positive) content, which
/// bounds coefficient growth without touching any sign.
RemainderSequence remainder_sequence(const Poly& p, const Poly& q, bool normalize = true);

/// Adjacent sign flips. Zero entries are rejected.
std::size_t sign_variations(std::span<const Sign> signs);

/// #{x : p(x) = 0, q(x) > 0} - #{x : p(x) = 0, q(x) < 0}.
long tarski_query(const Poly& p, const Poly& q, QueryStats& stats);

/// tarski_query(p, prod_{i in subset} qs[i]).
long tarski_query_subset(const Poly& p, std::span<const Poly> qs, const IndexSubset& subset, QueryStats& stats);

/// Number of distinct real roots of p (one Tarski query).
std::size_t count_real_roots(const Poly& p, QueryStats& stats);

}  // namespace bkr
