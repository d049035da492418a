#pragma once

#include <string>

#include "evoiso/errors.hpp"
#include "evoiso/evolution_algebra.hpp"

namespace evoiso {

/// Algebra description language:
///
///   file   := header ';' (equation ';')*
///   header := 'dim' INT 'over' ('gf(' INT ')' | 'q')
///   equation := 'e' INT '*' 'e' INT '=' linear-combination
///   linear-combination := term ('+' term)* | '0'
///   term   := [coefficient] 'e' INT
///   coefficient := integer | integer '/' integer
///
/// Whitespace-insensitive. Unlisted e_i*e_i products default to 0; products
/// of distinct basis vectors may only be assigned 0.
EvolutionAlgebra parse_algebra(const std::string& text);

/// Canonical rendering; parse_algebra(format_algebra(a)) == a.
std::string format_algebra(const EvolutionAlgebra& a);

}  // namespace evoiso
