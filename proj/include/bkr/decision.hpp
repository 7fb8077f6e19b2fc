#pragma once

#include <bkr/formula.hpp>
#include <bkr/poly.hpp>
#include <bkr/sign_determination.hpp>
#include <bkr/tarski.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace bkr {

struct BasisFactor {
  std::size_t index = 0;
  unsigned exponent = 0;

  friend bool operator==(const BasisFactor&, const BasisFactor&) = default;
};

/// g = c * prod basis[index]^exponent, recorded up to the positive part of c.
struct Decomposition {
  Sign constant_sign = Sign::Positive;
  std::vector<BasisFactor> factors;
};

/// Pairwise coprime, squarefree, monic, nonconstant polynomials whose power
/// products reconstruct every input, in canonical order.
struct CoprimeBasis {
  std::vector<Poly> basis;
  std::vector<Decomposition> decomposition;
};

/// Gcd-splitting refinement of the squarefree factorizations (Yun) of the
/// inputs; no irreducible factorization. Errc::ConstantInput for constant inputs.
CoprimeBasis coprime_basis(std::span<const Poly> polys);

/// Sign of g at a point from the signs of the basis there.
Sign recompose_sign(const Decomposition& d, std::span<const Sign> basis_signs);

/// (x - B)(x + B) * (prod Q)' with B = crb(prod Q). Its roots interleave the
/// roots of prod Q and lie beyond them on both sides, and it shares no root
/// with any element of Q.
Poly build_aux_poly(std::span<const Poly> basis);

enum class Method { Bkr, Naive };

struct DecisionOptions {
  Method method = Method::Bkr;
  Exec exec = Exec::Serial;
  std::size_t naive_limit = 16;
};

struct SignSearch {
  /// Over the input polynomials, distinct and sorted (-1 < 0 < +1 lexicographically).
  std::vector<SignAssignment> assignments;
  std::size_t factor_count = 0;
  std::size_t max_factor_degree = 0;
  QueryStats stats;
};

/// Every sign vector the input polynomials realize at some real x: the
/// assignments with one basis element zero (one restricted problem per
/// element, at its roots) joined with the all-nonzero ones (at the roots of
/// build_aux_poly), mapped back through the decomposition.
SignSearch find_consistent_signs(std::span<const Poly> polys, const DecisionOptions& opts = {});

enum class Quantifier { Forall, Exists };

struct Decision {
  bool verdict = false;
  SignSearch search;
};

Decision decide(const ConvertedFormula& f, Quantifier q, const DecisionOptions& opts = {});

bool decide_universal(const RawFormula& f, const DecisionOptions& opts = {});
bool decide_existential(const RawFormula& f, const DecisionOptions& opts = {});

}  // namespace bkr
