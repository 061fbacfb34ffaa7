#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lcroots/geometry.hpp"

namespace lcroots {

class LiteralError : public std::invalid_argument {
 public:
  LiteralError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}

  /// Zero-based offset into the literal where parsing failed.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses `a`, `bi`, `a+bi` or `a-bi` where a and b are decimal or
/// scientific numbers (`1e-3-2.5e2i`). A bare `i` / `-i` means a unit
/// imaginary part. Surrounding whitespace is ignored.
Complex parse_complex(std::string_view text);

/// Shortest text that parse_complex() maps back to exactly `z`.
std::string format_complex(Complex z);

/// Shortest round-trip decimal for a finite double.
std::string format_double(double x);

}  // namespace lcroots
