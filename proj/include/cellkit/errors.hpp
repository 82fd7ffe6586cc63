#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cellkit {

enum class ErrorCode {
  CompositeModulusRank,
  NonSquare,
  WrongRing,
  RingMismatch,
  DimensionMismatch,
  NotInvertible,
  NoCanonicalMap,
  NotAnIdeal,
  NonTerminating,
  DatumInvalid,
  WitnessDependence,
  NotNilpotent,
  CriteriaDisagree,
  HypothesisViolated,
  EmptyInput,
  SizeLimit,
  CandidateNotBasis,
  CandidateNotCellular,
  ChainNotIncreasing,
  SizeMismatch,
  NotPrime,
  InvalidArgument,
  ParseError,
  InternalError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Errors signalling a broken internal invariant rather than bad input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::CriteriaDisagree || code_ == ErrorCode::NotNilpotent ||
           code_ == ErrorCode::NonTerminating || code_ == ErrorCode::ChainNotIncreasing ||
           code_ == ErrorCode::InternalError;
  }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeModulusRank: return "CompositeModulusRank";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::WrongRing: return "WrongRing";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NoCanonicalMap: return "NoCanonicalMap";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::DatumInvalid: return "DatumInvalid";
    case ErrorCode::WitnessDependence: return "WitnessDependence";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::CandidateNotBasis: return "CandidateNotBasis";
    case ErrorCode::CandidateNotCellular: return "CandidateNotCellular";
    case ErrorCode::ChainNotIncreasing: return "ChainNotIncreasing";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace cellkit
