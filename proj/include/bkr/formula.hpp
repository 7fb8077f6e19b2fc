#pragma once

#include <bkr/poly.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bkr {

/// Surface relations accepted in input; every atom is "poly rel 0".
enum class RawRel { Gt, Geq, Eq, Lt, Leq, Neq };

/// Formula as written by a user: concrete polynomials, the full relation set
/// and negation.
struct RawFormula {
  enum class Kind { Atom, Not, And, Or };

  Kind kind = Kind::Atom;
  RawRel rel = RawRel::Eq;
  Poly poly;
  std::vector<RawFormula> children;

  static RawFormula atom(Poly p, RawRel rel);
  static RawFormula negation(RawFormula f);
  static RawFormula conj(std::vector<RawFormula> fs);
  static RawFormula disj(std::vector<RawFormula> fs);

  friend bool operator==(const RawFormula&, const RawFormula&) = default;
};

/// Rewrites into the core grammar (p > 0 | p >= 0 | p = 0 | and | or):
/// p < 0 -> -p > 0, p <= 0 -> -p >= 0, p != 0 -> p > 0 or -p > 0, and
/// negations pushed to the atoms by De Morgan.
RawFormula desugar(const RawFormula& f);

/// Core relations.
enum class Rel { Gt, Geq, Eq };

/// Formula structure over a side table of polynomials. Atoms refer to the
/// table by index; True/False are atoms whose polynomial was constant.
struct Formula {
  enum class Kind { Atom, True, False, And, Or };

  Kind kind = Kind::True;
  Rel rel = Rel::Gt;
  std::size_t poly = 0;
  std::vector<Formula> children;

  static Formula atom(Rel rel, std::size_t poly);
  static Formula constant(bool value);

  friend bool operator==(const Formula&, const Formula&) = default;
};

struct ConvertedFormula {
  Formula structure;
  /// Distinct, nonconstant.
  std::vector<Poly> polys;
};

/// Desugars, then splits into structure and deduplicated side table.
ConvertedFormula convert(const RawFormula& f);

/// Truth of the structure when polynomial i has sign sigma[i].
bool lookup_sem(const Formula& f, std::span<const Sign> sigma);

/// Truth of the formula at the point x.
bool fml_sem(const ConvertedFormula& f, const Rational& x);
bool fml_sem(const RawFormula& f, const Rational& x);

/// Prints in the input grammar; parse_formula(to_string(f)) == f.
std::string to_string(const RawFormula& f);
const char* to_string(RawRel rel);

}  // namespace bkr
