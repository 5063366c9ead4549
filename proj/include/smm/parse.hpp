#pragma once

// Textual term grammar: `1`, `mu`, `eta`, `delta`, `eps`, identifiers,
// `T(...)`, `Q(...)`, the macros `S(...)` and `pi(...)`, and `*` for
// multiplication. Whitespace-insensitive.

#include <stdexcept>
#include <string>
#include <string_view>

#include "smm/word.hpp"

namespace smm {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::string msg, std::size_t p)
      : std::runtime_error(std::move(msg)), pos(p) {}
};

// identifiers become generators
Word parseTerm(std::string_view src);
// identifiers become pattern variables
Word parsePattern(std::string_view src);

}  // namespace smm
