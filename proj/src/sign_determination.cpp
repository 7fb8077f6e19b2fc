#include <bkr/error.hpp>
#include <bkr/sign_determination.hpp>

#include "parallel.hpp"

#include <string>

namespace bkr {

namespace {

void observe(const SignDetOptions& opts, Stage stage, const Poly& p, std::span<const Poly> qs,
             const SignDetSystem& sys) {
  if (opts.observer) opts.observer(stage, p, qs, sys);
}

void require_coprime(const Poly& p, std::span<const Poly> qs) {
  if (p.is_zero()) throw Error(Errc::ZeroPoly, "sign determination at the roots of p = 0");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (!gcd(p, qs[i]).is_constant()) {
      throw Error(Errc::NotCoprime, "q[" + std::to_string(i) + "] = " + to_string(qs[i]) +
                                        " shares a factor with p = " + to_string(p));
    }
  }
}

SignDetSystem base_system() {
  return {Mat{{1, 1}, {1, -1}}, {{}, {0}}, {{Sign::Positive}, {Sign::Negative}}};
}

SignDetSystem calc_data_rec(const Poly& p, std::span<const Poly> qs, QueryStats& stats,
                            const SignDetOptions& opts) {
  if (qs.empty()) {
    if (count_real_roots(p, stats) == 0) return {};
    return {Mat{{1}}, {IndexSubset{}}, {SignAssignment{}}};
  }
  if (qs.size() == 1) return base_case(p, qs.front(), stats, opts);

  const std::size_t split = qs.size() / 2;
  SignDetSystem left;
  SignDetSystem right;
  QueryStats left_stats;
  QueryStats right_stats;
  std::exception_ptr errors[2];
  const bool parallel = opts.exec == Exec::Parallel;

#pragma omp task default(none) shared(p, qs, opts, left, left_stats, errors) firstprivate(split) if (parallel)
  {
    try {
      left = calc_data_rec(p, qs.first(split), left_stats, opts);
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  try {
    right = calc_data_rec(p, qs.subspan(split), right_stats, opts);
  } catch (...) {
    errors[1] = std::current_exception();
  }
#pragma omp taskwait
  detail::rethrow_first(errors);

  stats.merge(left_stats);
  stats.merge(right_stats);
  SignDetSystem combined = combine_systems(left, split, right);
  observe(opts, Stage::Combine, p, qs, combined);
  return reduce_system(p, qs, combined, stats, opts);
}

}  // namespace

Mat build_matrix(std::span<const IndexSubset> subsets, std::span<const SignAssignment> signs) {
  Mat m(subsets.size(), signs.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < signs.size(); ++j) {
      Sign s = Sign::Positive;
      for (const auto k : subsets[i]) {
        if (k >= signs[j].size()) {
          throw Error(Errc::IndexOutOfRange, "subset index " + std::to_string(k) + " for sign vector of length " +
                                                 std::to_string(signs[j].size()));
        }
        s = s * signs[j][k];
      }
      m(i, j) = to_int(s);
    }
  }
  return m;
}

Vec build_rhs(const Poly& p, std::span<const Poly> qs, std::span<const IndexSubset> subsets, QueryStats& stats,
              Exec exec) {
  const std::size_t count = subsets.size();
  Vec v(count);
  std::vector<QueryStats> slot_stats(count);
  std::vector<std::exception_ptr> errors(count);
  const bool parallel = exec == Exec::Parallel;

  detail::with_team(exec, [&] {
#pragma omp taskloop default(none) shared(p, qs, subsets, v, slot_stats, errors) firstprivate(count) \
    grainsize(1) if (parallel)
    for (std::size_t i = 0; i < count; ++i) {
      try {
        v[i] = tarski_query_subset(p, qs, subsets[i], slot_stats[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  });
  detail::rethrow_first(errors);
  for (const auto& s : slot_stats) stats.merge(s);
  return v;
}

Vec solve_w(const SignDetSystem& sys, std::span<const Rational> v) {
  Vec w = mat_vec(invert(sys.matrix), v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) < 0 || w[i].get_den() != 1) {
      throw Error(Errc::Internal, "root count w[" + std::to_string(i) + "] = " + w[i].get_str() +
                                      " is not a non-negative integer");
    }
  }
  return w;
}

SignDetSystem base_case(const Poly& p, const Poly& q, QueryStats& stats, const SignDetOptions& opts) {
  const Poly qs[] = {q};
  SignDetSystem sys = base_system();
  observe(opts, Stage::Base, p, qs, sys);
  return reduce_system(p, qs, sys, stats, opts);
}

SignDetSystem combine_systems(const SignDetSystem& sys1, std::size_t n1, const SignDetSystem& sys2) {
  SignDetSystem out;
  out.matrix = kronecker(sys1.matrix, sys2.matrix);
  out.subsets.reserve(sys1.subsets.size() * sys2.subsets.size());
  for (const auto& a : sys1.subsets) {
    for (const auto& b : sys2.subsets) {
      IndexSubset merged = a;
      for (const auto k : b) merged.push_back(k + n1);
      out.subsets.push_back(std::move(merged));
    }
  }
  out.signs.reserve(sys1.signs.size() * sys2.signs.size());
  for (const auto& a : sys1.signs) {
    for (const auto& b : sys2.signs) {
      SignAssignment merged = a;
      merged.insert(merged.end(), b.begin(), b.end());
      out.signs.push_back(std::move(merged));
    }
  }
  return out;
}

SignDetSystem reduce_system(const Poly& p, std::span<const Poly> qs, const SignDetSystem& sys, QueryStats& stats,
                            const SignDetOptions& opts) {
  const Vec v = build_rhs(p, qs, sys.subsets, stats, opts.exec);
  const Vec w = solve_w(sys, v);

  std::vector<std::size_t> consistent;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (sgn(w[j]) != 0) consistent.push_back(j);
  const Mat pruned = take_cols(sys.matrix, consistent);
  const std::vector<std::size_t> basis = rows_to_keep(pruned);
  if (basis.size() != consistent.size()) {
    throw Error(Errc::Internal, "column-pruned matrix lost rank: " + std::to_string(basis.size()) + " pivot rows for " +
                                    std::to_string(consistent.size()) + " columns");
  }

  SignDetSystem out;
  out.matrix = take_rows(pruned, basis);
  for (const auto i : basis) out.subsets.push_back(sys.subsets[i]);
  for (const auto j : consistent) out.signs.push_back(sys.signs[j]);
  observe(opts, Stage::Reduce, p, qs, out);
  return out;
}

SignDetSystem calc_data(const Poly& p, std::span<const Poly> qs, QueryStats& stats, const SignDetOptions& opts) {
  require_coprime(p, qs);
  SignDetSystem out;
  detail::with_team(opts.exec, [&] { out = calc_data_rec(p, qs, stats, opts); });
  return out;
}

std::vector<SignAssignment> find_consistent_signs_at_roots(const Poly& p, std::span<const Poly> qs,
                                                           QueryStats& stats, const SignDetOptions& opts) {
  return calc_data(p, qs, stats, opts).signs;
}

std::vector<SignAssignment> all_sign_candidates(std::size_t n) {
  std::vector<SignAssignment> out(std::size_t{1} << n, SignAssignment(n));
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    for (std::size_t k = 0; k < n; ++k) out[idx][k] = (idx >> (n - 1 - k)) & 1 ? Sign::Negative : Sign::Positive;
  return out;
}

std::vector<IndexSubset> all_subsets(std::size_t n) {
  std::vector<IndexSubset> out(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    for (std::size_t k = 0; k < n; ++k)
      if ((idx >> (n - 1 - k)) & 1) out[idx].push_back(k);
  return out;
}

Vec solve_kronecker_power(std::span<const Rational> v, Exec exec) {
  const std::size_t size = v.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw Error(Errc::DimensionMismatch, "length " + std::to_string(size) + " is not a power of two");
  }
  Vec w(v.begin(), v.end());
  const bool parallel = exec == Exec::Parallel;
  detail::with_team(exec, [&] {
    for (std::size_t half = 1; half < size; half *= 2) {
      // Butterflies within one level are independent.
#pragma omp taskloop default(none) shared(w) firstprivate(half, size) if (parallel)
      for (std::size_t i = 0; i < size / 2; ++i) {
        const std::size_t lo = (i / half) * 2 * half + i % half;
        const std::size_t hi = lo + half;
        Rational a = w[lo];
        w[lo] += w[hi];
        w[hi] = a - w[hi];
      }
    }
  });
  const Rational inv_size(1, size);
  for (auto& x : w) x *= inv_size;
  return w;
}

std::vector<SignAssignment> naive_find_consistent_signs_at_roots(const Poly& p, std::span<const Poly> qs,
                                                                 QueryStats& stats, const SignDetOptions& opts) {
  if (qs.size() > opts.naive_limit) {
    throw Error(Errc::NTooLarge, std::to_string(qs.size()) + " polynomials exceed the naive limit of " +
                                     std::to_string(opts.naive_limit));
  }
  require_coprime(p, qs);
  const auto subsets = all_subsets(qs.size());
  const auto candidates = all_sign_candidates(qs.size());
  const Vec v = build_rhs(p, qs, subsets, stats, opts.exec);
  const Vec w = solve_kronecker_power(v, opts.exec);

  std::vector<SignAssignment> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (sgn(w[j]) < 0 || w[j].get_den() != 1) {
      throw Error(Errc::Internal, "naive root count w[" + std::to_string(j) + "] = " + w[j].get_str());
    }
    if (sgn(w[j]) != 0) out.push_back(candidates[j]);
  }
  return out;
}

}  // namespace bkr
