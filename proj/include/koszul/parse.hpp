#pragma once

#include <stdexcept>
#include <string>

#include "koszul/presentation.hpp"

namespace koszul {

// Raised on malformed presentation text; the message carries "line N: ...".
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Reads a presentation file:
//
//   operad <name>
//   flavor symmetric | nonsymmetric
//   field Q | F<p>
//   generator <id> arity <n> [degree <d>]
//   action <id> swap <k> = <term> (+ <term>)*
//   order lex | revlenlex
//   precedence <id> (< <id>)*
//   relation <poly> = 0
//
// '#' starts a comment.  <poly> is a signed sum of coefficient-prefixed
// monomials g(a1,...,an), each argument a leaf integer or a nested monomial;
// the leaves 1..n appear exactly once and their placement encodes the input
// permutation.  Action images list their inputs in order (the permutation
// part of an image is already determined by the swap being defined).
QuadraticPresentation parse_presentation(const std::string& text);

// Parses a polynomial against an existing generator space; any weight.
OperadElement parse_element(const GeneratorModule& mod, const std::string& text);

// Inverse of parse_presentation on canonical files: parsing the output
// reproduces the presentation, and printing is idempotent.
std::string print_presentation(const QuadraticPresentation& p);

}  // namespace koszul
