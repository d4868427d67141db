#pragma once

#include <string>

#include "monocat/matrix.hpp"
#include "monocat/scalar.hpp"

namespace monocat {

// Text grammar shared by the CLI and fixtures:
//   poly   := term (('+'|'-') term)*
//   term   := coeff | coeff '*' 'x' ('^'? int)? | 'x' ('^' int)?
//   coeff  := int | int '/' int            (the latter over the rationals only)
//   scalar := poly | '(' poly ')/(' poly ')'
//   matrix := '[' (row (',' row)*)? ']' with row := '[' (scalar (',' scalar)*)? ']'
// Whitespace-insensitive. Parse failures throw ParseError with line/column.

LocalScalar parse_scalar(const std::string& text, FieldSpec field);
LocalMatrix parse_matrix(const std::string& text, FieldSpec field);

std::string print_poly(const Poly& p);
std::string print_scalar(const LocalScalar& s);
std::string print_matrix(const LocalMatrix& m);

} // namespace monocat
