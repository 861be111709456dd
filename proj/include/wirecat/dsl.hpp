#pragma once

#include <string>

#include "wirecat/twocell.hpp"

namespace wirecat {

// Syntax errors carry 1-based line/column and what was expected.
struct SyntaxError {
  int line = 1;
  int col = 1;
  std::string expected;
  std::string to_string() const;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::optional<SyntaxError> error;
  bool ok() const { return value.has_value(); }
};

// word    := "1" | ident ("*" ident)*
// slice   := "[" word "|" (ident | "swap(" ident "," ident ")") "|" word "]"
// diagram := "id(" word ")" | slice (";" slice)*
// script  := "src" diagram ";" "cells:" [cell ("|" cell)*]
// cell    := "interchange@" int ["back"]
//          | "move:" kind "@" int [":" int]
//          | "gen2:" ident "@" int ["l=" word] ["r=" word] ["back"]
ParseResult<Word> parse_word(const std::string& text);
ParseResult<Diagram> parse_diagram(const std::string& text);
ParseResult<Script> parse_script(const std::string& text);

// Non-identity diagrams print without their source word, so parsing one
// needs generator arities to recover it; these overloads run infer_src.
ParseResult<Diagram> parse_diagram(const std::string& text,
                                   const Signature& sig);
ParseResult<Script> parse_script(const std::string& text,
                                 const Signature& sig);

// Signature files: one declaration per line.
//   obj a b c
//   gen f : a -> b * c
//   gen2 alpha : <diagram> => <diagram> [invertible]
ParseResult<Signature> parse_signature(const std::string& text);

// Inverse serializers; parse(print(x)) == x.
std::string print_word(const Word& w);
std::string print_diagram(const Diagram& d);
std::string print_script(const Script& s);
std::string print_signature(const Signature& sig);

}  // namespace wirecat
