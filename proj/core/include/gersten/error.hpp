#pragma once

#include <stdexcept>
#include <string>

namespace gersten {

enum class ErrorCode {
  NotPrime,
  UnknownRingKind,
  DomainMismatch,
  DimensionMismatch,
  NotInvertible,
  NotAComplex,
  ShapeMismatch,
  NotAHomotopy,
  BlockMismatch,
  NotAMorphismOfC,
  BlockNotInvertible,
  NotInC,
  NotInjective,
  RankMismatch,
  NotAComplexPair,
  ResidueNotExact,
  NotFunctorial,
  CoherenceFailure,
  NotFree,
  ComponentNotEquivalence,
  LevelIncompatible,
  PreconditionViolated,
  NotTriangular,
  ObjectsNotEqual,
  UnitElement,
  ZeroElement,
  NotTorsion,
  ConfigInvalid,
  ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gersten
