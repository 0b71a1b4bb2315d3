#include "bw/error.hpp"

namespace bw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadVariables: return "BadVariables";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::DoesNotPreserveIdeal: return "DoesNotPreserveIdeal";
    case ErrorCode::UnitCertificateAbsent: return "UnitCertificateAbsent";
    case ErrorCode::ZeroTau: return "ZeroTau";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::ResourceExceeded: return "ResourceExceeded";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace bw
