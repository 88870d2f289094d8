#pragma once

#include <stdexcept>
#include <string>

namespace setdyn {

/// Failure categories surfaced by the toolkit. The CLI maps these to exit
/// codes; library users can switch on kind() instead of parsing messages.
enum class ErrorKind {
  InvalidCover,          // empty or malformed cover (covers are nonempty)
  DomainMismatch,        // covers over different working domains
  DepthMismatch,         // operation requires equal subdivision depth
  RefinementLimit,       // subdivision depth exceeded the configured maximum
  UnsupportedParameter,  // model parameter outside the supported range
  InsufficientEvidence,  // too few samples to estimate Lipschitz data
  NotAbsorbing,          // an image enclosure escapes the working domain
  NotInvariant,          // node set is not forward invariant in the graph
  NonConvergence,        // fixed-cover iteration failed to stabilize
  EventLost,             // bisection could not retain the transition event
  InvalidArgument,       // generic precondition violation
  UnknownSchema,         // input file not recognized as cover/report
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::DepthMismatch: return "DepthMismatch";
    case ErrorKind::RefinementLimit: return "RefinementLimit";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::InsufficientEvidence: return "InsufficientEvidence";
    case ErrorKind::NotAbsorbing: return "NotAbsorbing";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EventLost: return "EventLost";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownSchema: return "UnknownSchema";
  }
  return "Unknown";
}

}  // namespace setdyn
