#pragma once

#include <string>

#include "deriv/derivation.hpp"

namespace deriv {

// Syntax error with 1-based position information.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// expr := term (("+"|"-") term)* ; term := factor ("*" factor)* ;
// factor := primary ("^" nat)? ; primary := rational | ident |
// "(" expr ")" | "-" factor. No implicit multiplication.
MultiPoly parse_expression(const std::string& text, const RingContextPtr& ctx,
                           int line_offset = 1);

// K[X]-only expression (for pab/psolve inputs).
UniPoly parse_unipoly_expression(const std::string& text);

// file := "vars:" ident ("," ident)* newline  ("d(" ident ")" "=" expr)+
// X must be declared first; every variable gets exactly one image line.
Derivation parse_derivation(const std::string& text);

// Same surface for automorphisms: "rho(v) = expr" plus "rhoinv(v) = expr"
// lines. With derive_affine_inverse the rhoinv lines may be omitted for
// affine substitutions; the inverse is computed exactly.
Automorphism parse_automorphism(const std::string& text, const RingContextPtr& ctx,
                                bool derive_affine_inverse = false);

}  // namespace deriv
