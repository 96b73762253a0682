#pragma once

#include "capsula/minilang/ast.hpp"

namespace capsula::minilang {

/// Parses minilang source (UTF-8, LF line endings, one statement per line,
/// brace-delimited blocks, '#' comments). Throws SyntaxError with the
/// offending line.
Script parse_script(std::string_view source);

} // namespace capsula::minilang
