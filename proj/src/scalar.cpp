#include "germlab/scalar.hpp"

#include <gmp.h>

#include <cstdio>

namespace germlab {

namespace {

std::optional<Integer> exact_integer_root(const Integer& x, unsigned n) {
  if (x < 0 && n % 2 == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.backend().data(), x.backend().data(), n) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& x, unsigned n) {
  if (n == 0) return std::nullopt;
  const auto num = exact_integer_root(boost::multiprecision::numerator(x), n);
  const auto den = exact_integer_root(boost::multiprecision::denominator(x), n);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::string to_decimal_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorKind::NonPositiveConstantTerm: return "NonPositiveConstantTerm";
    case ErrorKind::InnerNotBased: return "InnerNotBased";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::SingularAtOrigin: return "SingularAtOrigin";
    case ErrorKind::NotXRegularOrder2: return "NotXRegularOrder2";
    case ErrorKind::ImplicitDegenerate: return "ImplicitDegenerate";
    case ErrorKind::NotExactRoot: return "NotExactRoot";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NotExpandableAtOrigin: return "NotExpandableAtOrigin";
    case ErrorKind::NoDoublePoints: return "NoDoublePoints";
    case ErrorKind::DegenerateBranch: return "DegenerateBranch";
    case ErrorKind::ContactExceedsDegree: return "ContactExceedsDegree";
    case ErrorKind::NoCriticalPoint: return "NoCriticalPoint";
    case ErrorKind::DegenerateCritical: return "DegenerateCritical";
    case ErrorKind::ZeroCurve: return "ZeroCurve";
    case ErrorKind::Nongeneric: return "Nongeneric";
    case ErrorKind::ModuliConstraintViolated: return "ModuliConstraintViolated";
    case ErrorKind::NotFold: return "NotFold";
    case ErrorKind::DiscriminantsTangent: return "DiscriminantsTangent";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::BoundaryDegenerate: return "BoundaryDegenerate";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::DomainExceeded: return "DomainExceeded";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::EmptySampleRegion: return "EmptySampleRegion";
    case ErrorKind::NoWeb: return "NoWeb";
    case ErrorKind::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

}  // namespace germlab
