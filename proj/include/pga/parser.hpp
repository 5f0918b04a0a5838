#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pga/term.hpp"

namespace pga {

/// Thrown for any rejected input. `position` is a 1-based character index.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Program-term dialect: `a;(#2;b;+c)^w`. Repeat instructions are rejected.
PgaTerm parse_pga(std::string_view text);

/// Flat-sequence dialect: `+a;-b;#4;\##2`. Both `\##n` and `##n` spell a
/// repeater; `^w` and parentheses are rejected.
LSeq parse_l(std::string_view text);

enum class Dialect : std::uint8_t { Pga, Pgla };

/// Guesses the dialect from surface markers: `^` means program terms, `##`
/// means flat sequences. Both in one input is an error.
Dialect detect_dialect(std::string_view text);

}  // namespace pga
