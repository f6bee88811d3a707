#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germlab {

enum class ErrorKind {
  // jets
  NonUnitDivisor,
  NonPositiveConstantTerm,
  InnerNotBased,
  NotInvertible,
  SingularAtOrigin,
  NotXRegularOrder2,
  ImplicitDegenerate,
  NotExactRoot,
  // expr
  Parse,
  Domain,
  NotExpandableAtOrigin,
  // germs
  NoDoublePoints,
  DegenerateBranch,
  ContactExceedsDegree,
  NoCriticalPoint,
  DegenerateCritical,
  ZeroCurve,
  Nongeneric,
  // normal forms
  ModuliConstraintViolated,
  NotFold,
  DiscriminantsTangent,
  NonUnit,
  WrongType,
  BoundaryDegenerate,
  NotASolution,
  // moduli
  NotMonotone,
  NewtonDiverged,
  DomainExceeded,
  // webs
  BadModulus,
  EmptySampleRegion,
  NoWeb,
  // cli
  EmptyLevelSet,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse, message + " at offset " + std::to_string(position)),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace germlab
