#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkred {

/// Every failure the library reports carries one of these codes. The
/// `name()` strings are part of the wire contract (service error bodies,
/// CLI messages) and must not change.
enum class ErrorCode {
  EmptyMatrix,
  NotSymmetric,
  NonzeroDiagonal,
  NonBinaryEntry,
  NotSquare,
  IndexOutOfRange,
  TooLargeForExhaustive,
  InvalidK,
  GeneratorOutOfRange,
  NotPure,
  StrandCountMismatch,
  UnknownCrossing,
  OddCrossingParity,
  EmptySubset,
  UnknownComponent,
  InvalidDiagram,
  StaleSite,
  DiagonalQuery,
  CertificateInvalid,
  MalformedInput,
};

constexpr std::string_view name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::NonBinaryEntry: return "NonBinaryEntry";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::StrandCountMismatch: return "StrandCountMismatch";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::OddCrossingParity: return "OddCrossingParity";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::StaleSite: return "StaleSite";
    case ErrorCode::DiagonalQuery: return "DiagonalQuery";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linkred
