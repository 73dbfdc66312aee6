#pragma once

// Syntax tree for the scalar / polynomial text grammar:
//
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ['^' integer]
//   atom  := integer | identifier | '(' expr ')'

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace skewpbw::expr {

enum class NodeKind { Integer, Symbol, Add, Sub, Mul, Div, Neg, Pow };

struct Node {
  NodeKind kind;
  std::size_t position = 0;  // byte offset in the source text
  mpz_class integer;         // Integer
  std::string symbol;        // Symbol
  unsigned long exponent = 0;  // Pow
  std::vector<std::unique_ptr<Node>> children;
};

/// Throws ParseError (with byte position) on malformed or empty input.
std::unique_ptr<Node> parse(std::string_view text);

/// Splits a comma-separated list at top level (commas inside parentheses are
/// kept); surrounding whitespace is trimmed, empty items are dropped.
std::vector<std::string> split_top_level(std::string_view text, char separator = ',');

}  // namespace skewpbw::expr
