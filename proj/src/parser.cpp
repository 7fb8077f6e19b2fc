#include <bkr/parser.hpp>

#include <cctype>
#include <utility>

namespace bkr {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  RawFormula formula() { return disj(); }

  Poly poly() {
    skip_ws();
    Poly acc;
    bool negative = false;
    if (eat_minus()) {
      negative = true;
    } else {
      eat('+');
    }
    Poly t = term();
    acc = negative ? -t : t;
    for (;;) {
      skip_ws();
      if (eat_minus()) {
        acc = acc - term();
      } else if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else {
        return acc;
      }
    }
  }

  void expect_end(std::vector<std::string> expected) {
    skip_ws();
    if (pos_ != src_.size()) fail(std::move(expected));
  }

  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ == src_.size();
  }

  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

 private:
  RawFormula disj() {
    std::vector<RawFormula> parts;
    parts.push_back(conj());
    while (eat_str("\\/")) parts.push_back(conj());
    if (parts.size() == 1) return std::move(parts.front());
    return RawFormula::disj(std::move(parts));
  }

  RawFormula conj() {
    std::vector<RawFormula> parts;
    parts.push_back(atomf());
    while (eat_str("/\\")) parts.push_back(atomf());
    if (parts.size() == 1) return std::move(parts.front());
    return RawFormula::conj(std::move(parts));
  }

  RawFormula atomf() {
    skip_ws();
    if (eat('(')) {
      RawFormula inner = formula();
      skip_ws();
      if (!eat(')')) fail({"')'", "'/\\'", "'\\/'"});
      return inner;
    }
    if (eat('~')) return RawFormula::negation(atomf());
    if (!starts_poly()) fail({"'('", "'~'", "polynomial"});
    Poly lhs = poly();
    const RawRel rel = relation();
    Poly rhs = poly();
    return RawFormula::atom(lhs - rhs, rel);
  }

  RawRel relation() {
    skip_ws();
    if (eat_str(">=")) return RawRel::Geq;
    if (eat_str("<=")) return RawRel::Leq;
    if (eat_str("!=")) return RawRel::Neq;
    if (eat_str(">")) return RawRel::Gt;
    if (eat_str("<")) return RawRel::Lt;
    if (eat_str("=")) return RawRel::Eq;
    fail({"'>'", "'>='", "'='", "'<'", "'<='", "'!='", "'+'", "'-'"});
  }

  Poly term() {
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip_ws();
      if (eat('*')) {
        skip_ws();
        if (peek() != 'x') fail({"'x'"});
      }
    }
    skip_ws();
    if (peek() != 'x') {
      if (!have_coeff) fail({"number", "'x'"});
      return Poly::constant(coeff);
    }
    ++pos_;
    std::size_t exponent = 1;
    if (eat('^')) {
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"exponent"});
      exponent = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        exponent = exponent * 10 + static_cast<std::size_t>(peek() - '0');
        if (exponent > 100000) fail({"smaller exponent"});
        ++pos_;
      }
    }
    return Poly::monomial(coeff, exponent);
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    // "/" starts a denominator only when a digit follows; "/\" is conjunction.
    if (peek() == '/' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      const std::size_t den_start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (src_.substr(den_start, pos_ - den_start).find_first_not_of('0') == std::string_view::npos) {
        pos_ = den_start;
        fail({"positive denominator"});
      }
    }
    return parse_rational(src_.substr(start, pos_ - start));
  }

  [[nodiscard]] bool starts_poly() const {
    const char c = peek();
    return c == '-' || c == '+' || c == 'x' || std::isdigit(static_cast<unsigned char>(c)) ||
           src_.substr(pos_).starts_with(kUnicodeMinus);
  }

  bool eat_minus() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (src_.substr(pos_).starts_with(kUnicodeMinus)) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  bool eat_str(std::string_view s) {
    skip_ws();
    if (src_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[nodiscard]] char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(Errc::Parse, "at byte " + std::to_string(offset) + ": expected one of {" + join(expected) + "}, found " +
                             found),
      offset_(offset),
      expected_(std::move(expected)) {}

RawFormula parse_formula(std::string_view src) {
  Parser parser(src);
  RawFormula f = parser.formula();
  parser.expect_end({"'/\\'", "'\\/'", "end of input"});
  return f;
}

Poly parse_poly(std::string_view src) {
  Parser parser(src);
  Poly p = parser.poly();
  parser.expect_end({"'+'", "'-'", "end of input"});
  return p;
}

std::vector<Poly> parse_poly_list(std::string_view src) {
  std::vector<Poly> out;
  std::size_t start = 0;
  if (src.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  for (;;) {
    const std::size_t semi = src.find(';', start);
    const std::string_view piece = src.substr(start, semi == std::string_view::npos ? semi : semi - start);
    try {
      out.push_back(parse_poly(piece));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), e.expected(), "invalid polynomial");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace bkr
