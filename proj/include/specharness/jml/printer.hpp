#pragma once

#include <string>

#include "specharness/jml/ast.hpp"

namespace specharness::jml {

// Renders an expression so that parse(print(e)) is structurally equal to e.
std::string print_expression(const ExprPtr& e);

// Indented structural dump, one node per line (for the CLI `parse` command).
std::string dump_tree(const ExprPtr& e);

}  // namespace specharness::jml
