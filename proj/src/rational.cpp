#include <bkr/error.hpp>
#include <bkr/rational.hpp>

#include <algorithm>
#include <cctype>

namespace bkr {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroPoly: return "ZeroPoly";
    case Errc::ConstantPoly: return "ConstantPoly";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::EmptyQ: return "EmptyQ";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::Parse: return "ParseError";
    case Errc::Usage: return "UsageError";
    case Errc::Internal: return "InternalError";
  }
  return "Error";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(Errc::Internal, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    return !body.empty() &&
           std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!digits(num)) throw Error(Errc::Parse, "bad rational '" + std::string(text) + "'");
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  Rational r;
  r.get_num() = Integer(num_s, 10);
  if (slash == std::string_view::npos) {
    r.get_den() = 1;
  } else {
    const auto den = text.substr(slash + 1);
    if (!digits(den) || den.front() == '-' || den.front() == '+') {
      throw Error(Errc::Parse, "bad rational '" + std::string(text) + "'");
    }
    r.get_den() = Integer(std::string(den), 10);
    if (r.get_den() == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::size_t bitsize(const Rational& r) {
  const auto n = mpz_sizeinbase(r.get_num_mpz_t(), 2);
  const auto d = mpz_sizeinbase(r.get_den_mpz_t(), 2);
  return std::max(n, d);
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace bkr
