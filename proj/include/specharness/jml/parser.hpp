#pragma once

#include <string>

#include "specharness/jml/ast.hpp"
#include "specharness/jml/lexer.hpp"

namespace specharness::jml {

// Parses one annotation expression. Throws ParseError / UnsupportedConstructError.
ExprPtr parse_expression(const std::string& text);

}  // namespace specharness::jml
