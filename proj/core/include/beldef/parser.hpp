#pragma once

#include <string_view>

#include "beldef/formula.hpp"
#include "beldef/vocabulary.hpp"

namespace beldef {

// Grammar (ASCII surface syntax):
//   formula := iff
//   iff     := imp ("<->" imp)*          left associative
//   imp     := or ("->" or)*             right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "(" formula ")" | atom | "true" | "false"
//
// Unknown atoms are registered in `vocab` as encountered; a full
// vocabulary raises CapacityError, malformed text raises ParseError
// with the character position.
Formula parse_formula(std::string_view text, Vocabulary& vocab);

}  // namespace beldef
