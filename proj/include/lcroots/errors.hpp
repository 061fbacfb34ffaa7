#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcroots {

/// Why a quadratic falls outside the domain where the line/circle
/// construction is defined.
enum class Degeneracy {
  Regular,
  DoubleRoot,
  ZeroRoot,
  LineThroughOrigin,
};

std::string_view to_string(Degeneracy d);

enum class ErrorCode {
  ZeroArgument,
  CollinearPoints,
  DoubleRootDegenerate,
  DegenerateInput,
  NoIntersection,
  BisectorUndefined,
  ZeroMultiplier,
  GeneratorExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// failure happened, `degeneracy()` is set for DegenerateInput.
class LcError : public std::runtime_error {
 public:
  LcError(ErrorCode code, const std::string& what);
  LcError(Degeneracy cls, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  std::optional<Degeneracy> degeneracy() const noexcept { return degeneracy_; }

 private:
  ErrorCode code_;
  std::optional<Degeneracy> degeneracy_;
};

}  // namespace lcroots
