#include <bkr/decision.hpp>
#include <bkr/error.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <exception>

namespace bkr {

namespace {

void push_unique(std::vector<Poly>& list, Poly p) {
  if (p.is_constant()) return;
  if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(std::move(p));
}

// Yun's algorithm: the a_k with g = c * prod a_k^k, pairwise coprime.
std::vector<Poly> squarefree_factors(const Poly& g) {
  std::vector<Poly> out;
  Poly c = gcd(g, derivative(g));
  Poly w = exact_div(g, c);
  while (!w.is_constant()) {
    Poly y = gcd(w, c);
    out.push_back(monic(exact_div(w, y)));
    c = exact_div(c, y);
    w = std::move(y);
  }
  return out;
}

// Splits one overlapping pair; false once the list is pairwise coprime.
bool split_once(std::vector<Poly>& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      Poly g = gcd(list[i], list[j]);
      if (g.is_constant()) continue;
      Poly a = monic(exact_div(list[i], g));
      Poly b = monic(exact_div(list[j], g));
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
      push_unique(list, std::move(g));
      push_unique(list, std::move(a));
      push_unique(list, std::move(b));
      return true;
    }
  }
  return false;
}

std::vector<SignAssignment> solve_restricted(const Poly& p, std::span<const Poly> qs, QueryStats& stats,
                                             const DecisionOptions& opts) {
  SignDetOptions sd;
  sd.exec = opts.exec;
  sd.naive_limit = opts.naive_limit;
  if (opts.method == Method::Naive) return naive_find_consistent_signs_at_roots(p, qs, stats, sd);
  return find_consistent_signs_at_roots(p, qs, stats, sd);
}

}  // namespace

CoprimeBasis coprime_basis(std::span<const Poly> polys) {
  CoprimeBasis out;
  for (const auto& g : polys) {
    if (g.is_constant()) throw Error(Errc::ConstantInput, "constant polynomial " + to_string(g) + " in basis input");
    for (auto& f : squarefree_factors(g)) push_unique(out.basis, std::move(f));
  }
  while (split_once(out.basis)) {
  }
  std::sort(out.basis.begin(), out.basis.end(), canonical_less);

  for (const auto& g : polys) {
    Decomposition d;
    Poly rest = g;
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      unsigned e = 0;
      for (;;) {
        auto [q, r] = divmod(rest, out.basis[i]);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
      }
      if (e > 0) d.factors.push_back({i, e});
    }
    if (!rest.is_constant()) throw Error(Errc::Internal, "basis does not reconstruct " + to_string(g));
    d.constant_sign = sign(rest.leading_coeff());
    out.decomposition.push_back(std::move(d));
  }
  return out;
}

Sign recompose_sign(const Decomposition& d, std::span<const Sign> basis_signs) {
  Sign s = d.constant_sign;
  for (const auto& f : d.factors) {
    const Sign b = basis_signs[f.index];
    s = s * (f.exponent % 2 == 0 && b != Sign::Zero ? Sign::Positive : b);
  }
  return s;
}

Poly build_aux_poly(std::span<const Poly> basis) {
  if (basis.empty()) throw Error(Errc::EmptyQ, "auxiliary polynomial of an empty basis");
  const Poly prod = product(basis);
  const Rational bound(crb(prod));
  return Poly::linear_factor(bound) * Poly::linear_factor(-bound) * derivative(prod);
}

SignSearch find_consistent_signs(std::span<const Poly> polys, const DecisionOptions& opts) {
  SignSearch out;
  if (polys.empty()) {
    out.assignments.push_back({});
    return out;
  }
  const CoprimeBasis cb = coprime_basis(polys);
  const std::vector<Poly>& basis = cb.basis;
  const std::size_t n = basis.size();
  if (opts.method == Method::Naive && n > opts.naive_limit) {
    throw Error(Errc::NTooLarge, std::to_string(n) + " basis factors exceed the naive limit of " +
                                     std::to_string(opts.naive_limit));
  }
  out.factor_count = n;
  for (const auto& q : basis) out.max_factor_degree = std::max(out.max_factor_degree, q.nonzero_degree());

  // Subproblems 0..n-1: signs of the other basis elements at the roots of
  // basis[i]. Subproblem n: all of them at the roots of the auxiliary poly.
  const Poly aux = build_aux_poly(basis);
  std::vector<std::vector<SignAssignment>> found(n + 1);
  std::vector<QueryStats> slot_stats(n + 1);
  std::vector<std::exception_ptr> errors(n + 1);
  const bool parallel = opts.exec == Exec::Parallel;

  detail::with_team(opts.exec, [&] {
#pragma omp taskloop default(none) shared(basis, aux, found, slot_stats, errors, opts) firstprivate(n) \
    grainsize(1) if (parallel)
    for (std::size_t i = 0; i <= n; ++i) {
      try {
        if (i == n) {
          found[i] = solve_restricted(aux, basis, slot_stats[i], opts);
        } else {
          std::vector<Poly> others;
          for (std::size_t k = 0; k < n; ++k)
            if (k != i) others.push_back(basis[k]);
          auto partial = solve_restricted(basis[i], others, slot_stats[i], opts);
          for (auto& s : partial) s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), Sign::Zero);
          found[i] = std::move(partial);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  });
  detail::rethrow_first(errors);
  for (const auto& s : slot_stats) out.stats.merge(s);

  for (const auto& group : found) {
    for (const auto& basis_signs : group) {
      SignAssignment g_signs;
      g_signs.reserve(polys.size());
      for (const auto& d : cb.decomposition) g_signs.push_back(recompose_sign(d, basis_signs));
      out.assignments.push_back(std::move(g_signs));
    }
  }
  std::sort(out.assignments.begin(), out.assignments.end());
  out.assignments.erase(std::unique(out.assignments.begin(), out.assignments.end()), out.assignments.end());
  return out;
}

Decision decide(const ConvertedFormula& f, Quantifier q, const DecisionOptions& opts) {
  Decision out;
  out.search = find_consistent_signs(f.polys, opts);
  auto holds = [&](const SignAssignment& s) { return lookup_sem(f.structure, s); };
  const auto& all = out.search.assignments;
  out.verdict = q == Quantifier::Forall ? std::all_of(all.begin(), all.end(), holds)
                                        : std::any_of(all.begin(), all.end(), holds);
  return out;
}

bool decide_universal(const RawFormula& f, const DecisionOptions& opts) {
  return decide(convert(f), Quantifier::Forall, opts).verdict;
}

bool decide_existential(const RawFormula& f, const DecisionOptions& opts) {
  return decide(convert(f), Quantifier::Exists, opts).verdict;
}

}  // namespace bkr
