#ifndef RATCALC_SCALAR_IO_HPP
#define RATCALC_SCALAR_IO_HPP

#include <string>

#include <json.hpp>

#include "ratcalc/polynomial.hpp"

namespace ratcalc {

/// Parses "n" or "n/d" with an optional leading sign, exactly; anything else
/// raises a parse error naming the offending position.
Rational parse_rational(const std::string& text);

/// Accepts either a rational string (real value) or {"re": "...", "im": "..."}.
/// JSON numbers are rejected: all scalars travel as exact strings.
GaussianRational scalar_from_json(const nlohmann::json& j);

/// Always emits the {"re", "im"} object form.
nlohmann::json scalar_to_json(const GaussianRational& v);

/// Coefficient array, index = power; [] is the zero polynomial.
Polynomial poly_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const Polynomial& p);

}  // namespace ratcalc

#endif
