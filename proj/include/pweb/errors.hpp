#pragma once

#include <stdexcept>
#include <string>

namespace pweb {

enum class Err {
  BadParameter,
  IdentityTransform,
  NotLoxodromic,
  IntersectingCircles,
  DegenerateRadius,
  NonpositiveT,
  OverlappingCircles,
  ExtensionCheckFailed,
  SharedGeneratorMismatch,
  DuplicateLabel,
  PreciseInvarianceFailed,
  ConjugationFailed,
  RegionMapFailed,
  NotCoprime,
  PowerCheckFailed,
  TooFewPoints,
  DegenerateScales,
  BadDimension,
  UnknownGenerator,
  SyntaxError,
  NotDoubled,
  InconsistentDecomposition,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::BadParameter: return "BadParameter";
    case Err::IdentityTransform: return "IdentityTransform";
    case Err::NotLoxodromic: return "NotLoxodromic";
    case Err::IntersectingCircles: return "IntersectingCircles";
    case Err::DegenerateRadius: return "DegenerateRadius";
    case Err::NonpositiveT: return "NonpositiveT";
    case Err::OverlappingCircles: return "OverlappingCircles";
    case Err::ExtensionCheckFailed: return "ExtensionCheckFailed";
    case Err::SharedGeneratorMismatch: return "SharedGeneratorMismatch";
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::PreciseInvarianceFailed: return "PreciseInvarianceFailed";
    case Err::ConjugationFailed: return "ConjugationFailed";
    case Err::RegionMapFailed: return "RegionMapFailed";
    case Err::NotCoprime: return "NotCoprime";
    case Err::PowerCheckFailed: return "PowerCheckFailed";
    case Err::TooFewPoints: return "TooFewPoints";
    case Err::DegenerateScales: return "DegenerateScales";
    case Err::BadDimension: return "BadDimension";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::SyntaxError: return "SyntaxError";
    case Err::NotDoubled: return "NotDoubled";
    case Err::InconsistentDecomposition: return "InconsistentDecomposition";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace pweb
