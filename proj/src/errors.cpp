#include "latticefarm/errors.hpp"

namespace latticefarm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorCode::BadDecomposition: return "BadDecomposition";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::HaloMiss: return "HaloMiss";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RendezvousTimeout: return "RendezvousTimeout";
    case ErrorCode::DuplicateRank: return "DuplicateRank";
    case ErrorCode::PeerClosed: return "PeerClosed";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NotEnoughRanks: return "NotEnoughRanks";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonPositiveThroughput: return "NonPositiveThroughput";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::LaunchFailure: return "LaunchFailure";
  }
  return "UnknownError";
}

}  // namespace latticefarm
