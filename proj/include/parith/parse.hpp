#pragma once

#include <string>

#include "parith/ast.hpp"

namespace parith {

// Parses the ASCII concrete syntax. Throws SyntaxError (with byte offset and
// line/column) on malformed input, RankError on bad rank annotations.
Formula parse(const std::string& text);

// Parses a bare numerical term.
Term parse_term(const std::string& text);

}  // namespace parith
