#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bw {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  BadVariables,
  NotSmooth,
  DoesNotPreserveIdeal,
  UnitCertificateAbsent,
  ZeroTau,
  CurveMismatch,
  CertificateFailure,
  ResourceExceeded,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for everything the library reports. The code is stable and
/// is what the command-line front end maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bw
