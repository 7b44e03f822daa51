#pragma once

#include <string>

#include "deriv/derivation.hpp"

namespace deriv {

// Canonical text forms: terms in ascending monomial order, normalized
// signs, explicit '*', '^' only for exponents > 1. parse . print = id.
std::string to_string(const MultiPoly& p);
std::string to_string(const UniPoly& p);

// Whole-file formats matching the parser's grammar.
std::string to_string(const Derivation& d);
std::string to_string(const Automorphism& rho);

}  // namespace deriv
