#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

// Every failure mode the library reports. Codes are stable so callers
// (and the CLI exit-code mapping) can switch on them.
enum class ErrorCode {
  // input / validation
  ParseError,
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  AsymmetricWeight,
  NegativeWeight,
  TooSmall,
  DuplicatePoints,
  KTooLarge,
  NotAPermutation,
  DimensionMismatch,
  InvalidArgument,
  // numeric / model
  DirectedLaplacian,
  IsolatedNode,
  Defective,
  TooLarge,
  ZeroSpectralRadius,
  ZeroVector,
  WrongKind,
  KernelDomain,
  DegreeTooHigh,
  InvalidInterval,
  InvalidKernel,
  SpectrumExceedsBound,
  NotSymmetric,
  TooFewSamples,
  NotUnique,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::AsymmetricWeight: return "AsymmetricWeight";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DirectedLaplacian: return "DirectedLaplacian";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::Defective: return "Defective";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroSpectralRadius: return "ZeroSpectralRadius";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::KernelDomain: return "KernelDomain";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::SpectrumExceedsBound: return "SpectrumExceedsBound";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NotUnique: return "NotUnique";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // true for malformed-input failures, false for numeric/model failures
  bool is_input_error() const noexcept {
    switch (code_) {
      case ErrorCode::ParseError:
      case ErrorCode::IndexOutOfRange:
      case ErrorCode::SelfLoop:
      case ErrorCode::DuplicateEdge:
      case ErrorCode::AsymmetricWeight:
      case ErrorCode::NegativeWeight:
      case ErrorCode::TooSmall:
      case ErrorCode::DuplicatePoints:
      case ErrorCode::KTooLarge:
      case ErrorCode::NotAPermutation:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::InvalidArgument:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace gsp
