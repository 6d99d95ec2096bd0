#pragma once

#include <stdexcept>
#include <string>

namespace linfty {

enum class ErrorCode {
  WeightOutOfRange,
  DuplicateBasisName,
  SpaceMismatch,
  ArityMismatch,
  DegreeMismatch,
  FilteredViolation,
  SymmetryViolation,
  StructureInvalid,
  NotPronilpotent,
  InvalidContext,
  NotSquareZero,
  NotPositiveFiltration,
  NotAMorphism,
  NotMC,
  NotInKuranishiSet,
  NoStabilization,
  NotOneDimensional,
  NotFlat,
  OracleMismatch,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::DuplicateBasisName: return "DuplicateBasisName";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FilteredViolation: return "FilteredViolation";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::StructureInvalid: return "StructureInvalid";
    case ErrorCode::NotPronilpotent: return "NotPronilpotent";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::NotSquareZero: return "NotSquareZero";
    case ErrorCode::NotPositiveFiltration: return "NotPositiveFiltration";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotMC: return "NotMC";
    case ErrorCode::NotInKuranishiSet: return "NotInKuranishiSet";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::NotOneDimensional: return "NotOneDimensional";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

/// Exception carrying a machine-readable error code; the CLI maps
/// ParseError to exit 2 and every other code to exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace linfty
