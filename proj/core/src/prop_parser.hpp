#pragma once

// Internal: cursor-based entry to the propositional grammar, shared by the
// standalone parser and the proof-script reader.

#include "lexer.hpp"
#include "twistset/proplogic.hpp"

namespace twistset::detail {

PForm parse_prop_cursor(TokenCursor& cur);

}  // namespace twistset::detail
