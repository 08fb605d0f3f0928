#pragma once

#include <map>
#include <string_view>

#include "json.hpp"

#include "colpart/algebra/laurent_poly.hpp"

namespace colpart {

/// JSON object {"i,j": "num/den", ...} for the terms c * x^i * y^j.
nlohmann::json poly_to_json(const LaurentPoly2& p);
LaurentPoly2 poly_from_json(const nlohmann::json& j);

/// Parses the plain-text polynomial syntax: integers, x, y, ^, *, +, -,
/// parentheses, and division by a single term (e.g. "/y^2"). Juxtaposition
/// multiplies ("2xy(1+y)"), whitespace is ignored. Any other single letter
/// must appear in `bindings` and is replaced by its integer value.
/// Throws ParseError with the offending offset.
LaurentPoly2 parse_poly(std::string_view text, const std::map<char, long>& bindings = {});

}  // namespace colpart
