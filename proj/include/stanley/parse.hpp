#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stanley/monomial_ideal.hpp"

namespace stanley {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos_(position) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses "(" gen ("," gen)* ")" where gen is a '*'-separated product of
/// factors x<INT> or x<INT>^<INT> with INT >= 1. Whitespace is allowed
/// between tokens, but the digits of an index must follow their 'x'
/// directly and there is no implicit product ("x2x3" is an error).
/// Without var_count the number of variables is the largest index used.
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> var_count = std::nullopt);

}  // namespace stanley
