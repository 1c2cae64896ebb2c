#pragma once

#include <string>

#include "sgca/algebra.hpp"

namespace sgca {

// Parses the ASCII element grammar:
//   element   := term (('+'|'-') term)* | '0'
//   term      := factor ('*' factor)*        (at most one generator factor)
//   factor    := rational | 'c1' | 'c2' | generator
//   generator := ('L'|'P'|'G'|'H') '(' halfint ')' | 'C1' | 'C2'
//   halfint   := int | int '/' 2
// A purely scalar term containing the symbol c1 (e.g. "6*c1") denotes the
// central term 6*c1*C1; likewise for c2. Throws ParseError with the byte
// position of the offending token.
Element parse_element(const AlgebraParams& params, const std::string& text);

}  // namespace sgca
