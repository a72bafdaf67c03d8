#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace azw {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  IndexOutOfRange,
  InvalidParameter,
  NonSquare,
  PoleAt,
  PoleAtOne,
  NonPositiveShift,
  UnsupportedContinuation,
  DomainError,
  QuadratureBudgetExceeded,
  NotCyclotomic,
  IdentityCheckFailed,
  VerificationFailed,
  SpectralMismatch,
  CertificateFailed,
  SingularPoint,
  OddHalfWeight,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Library-wide exception. Every failure path carries one of the Errc codes
/// so callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace azw
