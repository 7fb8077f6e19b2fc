#include <bkr/error.hpp>
#include <bkr/formula.hpp>

#include <algorithm>

namespace bkr {

RawFormula RawFormula::atom(Poly p, RawRel rel) {
  RawFormula f;
  f.kind = Kind::Atom;
  f.rel = rel;
  f.poly = std::move(p);
  return f;
}

RawFormula RawFormula::negation(RawFormula f) {
  RawFormula out;
  out.kind = Kind::Not;
  out.children.push_back(std::move(f));
  return out;
}

RawFormula RawFormula::conj(std::vector<RawFormula> fs) {
  RawFormula out;
  out.kind = Kind::And;
  out.children = std::move(fs);
  return out;
}

RawFormula RawFormula::disj(std::vector<RawFormula> fs) {
  RawFormula out;
  out.kind = Kind::Or;
  out.children = std::move(fs);
  return out;
}

Formula Formula::atom(Rel rel, std::size_t poly) {
  Formula f;
  f.kind = Kind::Atom;
  f.rel = rel;
  f.poly = poly;
  return f;
}

Formula Formula::constant(bool value) {
  Formula f;
  f.kind = value ? Kind::True : Kind::False;
  return f;
}

namespace {

RawFormula core_atom(const Poly& p, RawRel rel, bool negated) {
  using K = RawRel;
  if (negated) {
    switch (rel) {
      case K::Gt: return RawFormula::atom(-p, K::Geq);
      case K::Geq: return RawFormula::atom(-p, K::Gt);
      case K::Eq: return core_atom(p, K::Neq, false);
      case K::Lt: return RawFormula::atom(p, K::Geq);
      case K::Leq: return RawFormula::atom(p, K::Gt);
      case K::Neq: return RawFormula::atom(p, K::Eq);
    }
  }
  switch (rel) {
    case K::Gt:
    case K::Geq:
    case K::Eq: return RawFormula::atom(p, rel);
    case K::Lt: return RawFormula::atom(-p, K::Gt);
    case K::Leq: return RawFormula::atom(-p, K::Geq);
    case K::Neq: return RawFormula::disj({RawFormula::atom(p, K::Gt), RawFormula::atom(-p, K::Gt)});
  }
  throw Error(Errc::Internal, "unknown relation");
}

RawFormula desugar(const RawFormula& f, bool negated) {
  switch (f.kind) {
    case RawFormula::Kind::Atom: return core_atom(f.poly, f.rel, negated);
    case RawFormula::Kind::Not:
      if (f.children.size() != 1) throw Error(Errc::Internal, "negation needs exactly one operand");
      return desugar(f.children.front(), !negated);
    case RawFormula::Kind::And:
    case RawFormula::Kind::Or: {
      std::vector<RawFormula> parts;
      parts.reserve(f.children.size());
      for (const auto& c : f.children) parts.push_back(desugar(c, negated));
      const bool is_and = (f.kind == RawFormula::Kind::And) != negated;
      return is_and ? RawFormula::conj(std::move(parts)) : RawFormula::disj(std::move(parts));
    }
  }
  throw Error(Errc::Internal, "unknown formula kind");
}

Formula convert_core(const RawFormula& f, std::vector<Poly>& table) {
  switch (f.kind) {
    case RawFormula::Kind::Atom: {
      const Rel rel = f.rel == RawRel::Gt ? Rel::Gt : (f.rel == RawRel::Geq ? Rel::Geq : Rel::Eq);
      if (f.poly.is_constant()) {
        const int s = sgn(f.poly.coeff(0));
        const bool value = rel == Rel::Gt ? s > 0 : (rel == Rel::Geq ? s >= 0 : s == 0);
        return Formula::constant(value);
      }
      auto it = std::find(table.begin(), table.end(), f.poly);
      if (it == table.end()) it = table.insert(table.end(), f.poly);
      return Formula::atom(rel, static_cast<std::size_t>(it - table.begin()));
    }
    case RawFormula::Kind::And:
    case RawFormula::Kind::Or: {
      Formula out;
      out.kind = f.kind == RawFormula::Kind::And ? Formula::Kind::And : Formula::Kind::Or;
      for (const auto& c : f.children) out.children.push_back(convert_core(c, table));
      return out;
    }
    case RawFormula::Kind::Not: break;
  }
  throw Error(Errc::Internal, "negation left after desugaring");
}

void print(const RawFormula& f, std::string& out, int parent_prec) {
  switch (f.kind) {
    case RawFormula::Kind::Atom:
      out += to_string(f.poly);
      out += ' ';
      out += to_string(f.rel);
      out += " 0";
      return;
    case RawFormula::Kind::Not:
      out += '~';
      print(f.children.front(), out, 3);
      return;
    case RawFormula::Kind::And:
    case RawFormula::Kind::Or: {
      const bool is_and = f.kind == RawFormula::Kind::And;
      const int prec = is_and ? 2 : 1;
      // Single-operand and empty connectives have no infix form; always bracket them.
      const bool paren = prec <= parent_prec || f.children.size() < 2;
      if (f.children.empty()) throw Error(Errc::Internal, "connective without operands");
      if (paren) out += '(';
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += is_and ? " /\\ " : " \\/ ";
        print(f.children[i], out, prec);
      }
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

RawFormula desugar(const RawFormula& f) { return desugar(f, false); }

ConvertedFormula convert(const RawFormula& f) {
  ConvertedFormula out;
  out.structure = convert_core(desugar(f), out.polys);
  return out;
}

bool lookup_sem(const Formula& f, std::span<const Sign> sigma) {
  switch (f.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom: {
      if (f.poly >= sigma.size()) throw Error(Errc::IndexOutOfRange, "atom index outside the sign context");
      const Sign s = sigma[f.poly];
      switch (f.rel) {
        case Rel::Gt: return s == Sign::Positive;
        case Rel::Geq: return s != Sign::Negative;
        case Rel::Eq: return s == Sign::Zero;
      }
      break;
    }
    case Formula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(), [&](const Formula& c) { return lookup_sem(c, sigma); });
    case Formula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(), [&](const Formula& c) { return lookup_sem(c, sigma); });
  }
  throw Error(Errc::Internal, "unknown formula kind");
}

bool fml_sem(const ConvertedFormula& f, const Rational& x) {
  std::vector<Sign> sigma;
  sigma.reserve(f.polys.size());
  for (const auto& p : f.polys) sigma.push_back(sign_at(p, x));
  return lookup_sem(f.structure, sigma);
}

bool fml_sem(const RawFormula& f, const Rational& x) { return fml_sem(convert(f), x); }

const char* to_string(RawRel rel) {
  switch (rel) {
    case RawRel::Gt: return ">";
    case RawRel::Geq: return ">=";
    case RawRel::Eq: return "=";
    case RawRel::Lt: return "<";
    case RawRel::Leq: return "<=";
    case RawRel::Neq: return "!=";
  }
  return "?";
}

std::string to_string(const RawFormula& f) {
  std::string out;
  print(f, out, 0);
  return out;
}

}  // namespace bkr
