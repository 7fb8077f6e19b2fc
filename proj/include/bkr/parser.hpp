#pragma once

#include <bkr/error.hpp>
#include <bkr/formula.hpp>
#include <bkr/poly.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bkr {

/// Parse failure with the byte offset into the source and the tokens that
/// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Grammar:
///   formula := disj
///   disj    := conj { "\/" conj }
///   conj    := atomf { "/\" atomf }
///   atomf   := "(" formula ")" | "~" atomf | poly rel poly
///   rel     := ">" | ">=" | "=" | "<" | "<=" | "!="
///   poly    := ["+"|"-"] term { ("+"|"-") term }
///   term    := rational ["*"] "x" ["^" nat] | rational | "x" ["^" nat]
///   rational:= nat [ "/" nat ]
/// "p rel q" becomes (p - q) rel 0. The Unicode minus sign is accepted as "-".
RawFormula parse_formula(std::string_view src);

/// A lone polynomial in the same syntax.
Poly parse_poly(std::string_view src);

/// Polynomials separated by ';'. An empty or all-blank source yields none.
std::vector<Poly> parse_poly_list(std::string_view src);

}  // namespace bkr
