#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivkit {

// Domain errors carry a stable machine-readable code; the CLI reports it verbatim.
enum class ErrorCode {
  MalformedRational,
  NegativeInput,
  InvalidSpec,
  NotAMember,
  NotDyadic,
  WrongMonoidKind,
  RingMismatch,
  ZeroInput,
  UnitInput,
  DuplicateSitePoint,
  EmptySite,
  UnsupportedSiteDegree,
  NoWitness,
  OutOfRange,
  NotFound,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ivkit
