#include "lcroots/errors.hpp"

namespace lcroots {

std::string_view to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Regular:
      return "Regular";
    case Degeneracy::DoubleRoot:
      return "DoubleRoot";
    case Degeneracy::ZeroRoot:
      return "ZeroRoot";
    case Degeneracy::LineThroughOrigin:
      return "LineThroughOrigin";
  }
  return "Unknown";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroArgument:
      return "ZeroArgument";
    case ErrorCode::CollinearPoints:
      return "CollinearPoints";
    case ErrorCode::DoubleRootDegenerate:
      return "DoubleRootDegenerate";
    case ErrorCode::DegenerateInput:
      return "DegenerateInput";
    case ErrorCode::NoIntersection:
      return "NoIntersection";
    case ErrorCode::BisectorUndefined:
      return "BisectorUndefined";
    case ErrorCode::ZeroMultiplier:
      return "ZeroMultiplier";
    case ErrorCode::GeneratorExhausted:
      return "GeneratorExhausted";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

LcError::LcError(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

LcError::LcError(Degeneracy cls, const std::string& what)
    : std::runtime_error(what), code_(ErrorCode::DegenerateInput), degeneracy_(cls) {}

}  // namespace lcroots
