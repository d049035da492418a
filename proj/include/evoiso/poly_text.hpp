#pragma once

#include <string>
#include <vector>

#include "evoiso/errors.hpp"
#include "evoiso/polynomial.hpp"

namespace evoiso {

/// Parses the textual polynomial format: terms of integer (or integer/integer)
/// coefficients and `*`-joined variable powers with `^`, separated by + or -,
/// e.g. "2*f11*g12^2 + 3". Whitespace-insensitive. Unknown identifiers are
/// rejected.
Polynomial parse_polynomial(const std::string& text, const Field& field, const VarSetPtr& vars);

/// All identifiers appearing in the text, in order of first appearance.
std::vector<std::string> collect_identifiers(const std::string& text);

/// Parses one polynomial per non-empty line; the ambient variable set is
/// collected from the whole input and ordered by name.
Ideal parse_ideal(const std::string& text, const Field& field);

}  // namespace evoiso
