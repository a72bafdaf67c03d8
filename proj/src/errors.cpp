#include "azw/errors.hpp"

namespace azw {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NonSquare: return "NonSquare";
    case Errc::PoleAt: return "PoleAt";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::NonPositiveShift: return "NonPositiveShift";
    case Errc::UnsupportedContinuation: return "UnsupportedContinuation";
    case Errc::DomainError: return "DomainError";
    case Errc::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case Errc::NotCyclotomic: return "NotCyclotomic";
    case Errc::IdentityCheckFailed: return "IdentityCheckFailed";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::SpectralMismatch: return "SpectralMismatch";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::OddHalfWeight: return "OddHalfWeight";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace azw
