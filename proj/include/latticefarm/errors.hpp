#pragma once

#include <stdexcept>
#include <string>

namespace latticefarm {

enum class ErrorCode {
  DegenerateMatrix,
  BadDecomposition,
  SizeMismatch,
  OutOfBounds,
  HaloMiss,
  NonConvergence,
  RendezvousTimeout,
  DuplicateRank,
  PeerClosed,
  Timeout,
  NotEnoughRanks,
  SingularMatrix,
  NonPositiveThroughput,
  ChecksumMismatch,
  FormatError,
  ValidationError,
  LaunchFailure,
};

const char* error_code_name(ErrorCode code);

// Single exception type carrying a code; callers match on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace latticefarm
