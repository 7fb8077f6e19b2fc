#pragma once

#include <stdexcept>
#include <string>

namespace bkr {

enum class Errc {
  DivisionByZeroPoly,
  BothZero,
  ZeroPoly,
  ConstantPoly,
  DimensionMismatch,
  NotSquare,
  NotInvertible,
  ZeroEntry,
  IndexOutOfRange,
  NotCoprime,
  NTooLarge,
  EmptyQ,
  ConstantInput,
  Parse,
  Usage,
  // A maintained invariant of the algorithm was found broken.
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bkr
