#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace amalg {

enum class Errc {
  ZeroInverse,
  ContextMismatch,
  ZeroPolynomial,
  DegreeCapExceeded,
  UnitIdeal,
  NotHomogeneous,
  NotWellDefined,
  DegreeMismatch,
  JUnit,
  ZeroModule,
  NotARing,
  NotAHom,
  SizeCap,
  ParseError,
  UnknownReference,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can map it to a diagnostic without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace amalg
