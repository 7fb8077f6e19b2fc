#pragma once

#include <bkr/matrix.hpp>
#include <bkr/poly.hpp>
#include <bkr/tarski.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bkr {

/// One sign per polynomial of the owning list.
using SignAssignment = std::vector<Sign>;

/// The (M, S, signs) triple threaded through base / combine / reduce.
///
/// Invariants between stages:
///   rows(matrix) == subsets.size(), cols(matrix) == signs.size();
///   matrix == build_matrix(subsets, signs);
///   matrix is square and invertible;
///   signs are pairwise distinct.
/// The empty system (no subsets, no signs, 0x0 matrix) is a valid value.
struct SignDetSystem {
  Mat matrix;
  std::vector<IndexSubset> subsets;
  std::vector<SignAssignment> signs;
};

enum class Exec { Serial, Parallel };

enum class Stage { Base, Combine, Reduce };

/// Called after every stage of the recursion with the polynomials the system
/// refers to. With Exec::Parallel it may be called from several threads.
using StageObserver =
    std::function<void(Stage stage, const Poly& p, std::span<const Poly> qs, const SignDetSystem& sys)>;

struct SignDetOptions {
  Exec exec = Exec::Serial;
  StageObserver observer;
  /// Largest list length the naive method accepts.
  std::size_t naive_limit = 16;
};

/// M(i, j) = prod_{k in subsets[i]} signs[j][k].
Mat build_matrix(std::span<const IndexSubset> subsets, std::span<const SignAssignment> signs);

/// v(i) = tarski_query_subset(p, qs, subsets[i]); one query per subset.
Vec build_rhs(const Poly& p, std::span<const Poly> qs, std::span<const IndexSubset> subsets, QueryStats& stats,
              Exec exec = Exec::Serial);

/// Solves M w = v. Every entry of w counts roots, so anything but a
/// non-negative integer is reported as Errc::Internal.
Vec solve_w(const SignDetSystem& sys, std::span<const Rational> v);

/// Subsets {{}, {0}}, signs {+1, -1}, reduced against (p, [q]).
SignDetSystem base_case(const Poly& p, const Poly& q, QueryStats& stats, const SignDetOptions& opts = {});

/// Candidate signs are all concatenations s1 ++ s2 (s1 outer), subsets all
/// unions I1 + (I2 shifted by n1) in the same order, matrix the Kronecker
/// product, so the defining formula for M keeps holding.
SignDetSystem combine_systems(const SignDetSystem& sys1, std::size_t n1, const SignDetSystem& sys2);

/// Solves for w, drops sign columns with w_j = 0, then keeps a basis of the
/// remaining rows (rows_to_keep) together with their subsets.
SignDetSystem reduce_system(const Poly& p, std::span<const Poly> qs, const SignDetSystem& sys, QueryStats& stats,
                            const SignDetOptions& opts = {});

/// Recursive sign determination of qs at the roots of p; the list is split
/// at floor(n/2). Requires gcd(p, q) constant for every q (Errc::NotCoprime).
SignDetSystem calc_data(const Poly& p, std::span<const Poly> qs, QueryStats& stats,
                        const SignDetOptions& opts = {});

/// The sign vectors of qs realized at the real roots of p.
std::vector<SignAssignment> find_consistent_signs_at_roots(const Poly& p, std::span<const Poly> qs,
                                                           QueryStats& stats, const SignDetOptions& opts = {});

/// All 2^n candidate signs against all 2^n subsets in a single matrix
/// equation: exactly 2^n Tarski queries. Errc::NTooLarge above naive_limit.
std::vector<SignAssignment> naive_find_consistent_signs_at_roots(const Poly& p, std::span<const Poly> qs,
                                                                 QueryStats& stats,
                                                                 const SignDetOptions& opts = {});

/// The 2^n candidate signs and subsets of the naive method, ordered so that
/// build_matrix of the two is the n-fold Kronecker power of [[1,1],[1,-1]].
std::vector<SignAssignment> all_sign_candidates(std::size_t n);
std::vector<IndexSubset> all_subsets(std::size_t n);

/// w with H w = v for H the n-fold Kronecker power of [[1,1],[1,-1]]
/// (v.size() == 2^n), by a fast Walsh-Hadamard transform.
Vec solve_kronecker_power(std::span<const Rational> v, Exec exec = Exec::Serial);

}  // namespace bkr
