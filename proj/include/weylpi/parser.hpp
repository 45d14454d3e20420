#pragma once
// Text form of free-algebra polynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x' index | '(' expr ')' | '[' expr ',' expr ']'
//
// Variables are x1 ... x999; whitespace is ignored; [a,b] is ab - ba.

#include <string>
#include <string_view>

#include "weylpi/free_algebra.hpp"

namespace weylpi {

/// Throws SyntaxError / UnknownVariable (with byte position), or DivisionByZero
/// for a literal whose denominator vanishes in the field.
NCPoly parse(std::string_view text, const FieldSpec& field = FieldSpec::rationals());

/// Deterministic rendering in DegLex term order; parse(format(f)) == f.
std::string format(const NCPoly& f);
std::string format_word(const Word& w);

}  // namespace weylpi
