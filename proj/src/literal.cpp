#include "lcroots/literal.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

namespace lcroots {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw LiteralError(where(), msg + " at position " + std::to_string(where()));
  }

  /// Optional sign; returns -1.0 or +1.0.
  std::optional<double> sign() {
    if (peek() == '+') {
      advance();
      return 1.0;
    }
    if (peek() == '-') {
      advance();
      return -1.0;
    }
    return std::nullopt;
  }

  /// Unsigned decimal/scientific magnitude, or nullopt if none starts here.
  std::optional<double> magnitude() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    std::size_t digits = 0;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p, ++digits;
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p, ++digits;
    }
    if (digits == 0) return std::nullopt;
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      const std::size_t exp_start = q;
      while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
      if (q == exp_start) {
        pos_ = q;
        fail("exponent has no digits");
      }
      p = q;
    }
    // from_chars rejects a leading '+', which the grammar above never feeds it.
    double value = 0.0;
    std::string_view token = text_.substr(start, p - start);
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || !std::isfinite(value)) fail("number out of range");
    pos_ = p;
    return value;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  offset = 0;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::size_t offset = 0;
  const std::string_view body = trim(text, offset);
  Scanner sc(body, offset);
  if (sc.done()) sc.fail("empty complex literal");

  const double first_sign = sc.sign().value_or(1.0);
  const std::optional<double> first = sc.magnitude();
  if (sc.peek() == 'i') {
    sc.advance();
    if (!sc.done()) sc.fail("unexpected text after imaginary part");
    return {0.0, first_sign * first.value_or(1.0)};
  }
  if (!first) sc.fail("expected a number");
  const double re = first_sign * *first;
  if (sc.done()) return {re, 0.0};

  const std::optional<double> second_sign = sc.sign();
  if (!second_sign) sc.fail("expected '+' or '-' before the imaginary part");
  const std::optional<double> second = sc.magnitude();
  if (sc.peek() != 'i') sc.fail("imaginary part must end with 'i'");
  sc.advance();
  if (!sc.done()) sc.fail("unexpected text after imaginary part");
  return {re, *second_sign * second.value_or(1.0)};
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string format_complex(Complex z) {
  std::string im = format_double(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(z.real()) + im + "i";
}

}  // namespace lcroots
