#pragma once

#include "bgx/irred.hpp"
#include "bgx/laurent.hpp"
#include "bgx/reps.hpp"

#include <json.hpp>

#include <string>

namespace bgx {

using Json = nlohmann::ordered_json;

// Canonical text form of a Laurent polynomial: terms in descending
// lexicographic exponent order joined by " + "; each term is the coefficient
// ("p" or "p/q") followed by " * name^exp" for every variable with nonzero
// exponent; the zero polynomial prints as "0".
std::string to_canonical_string(const LaurentPoly& p);

// Lenient inverse of to_canonical_string: accepts missing coefficients
// ("t1^2"), missing exponents ("t1"), '*' or whitespace separation, and a
// leading sign. Unknown variables raise ContextError, other malformed input
// ParseError. Canonical strings round-trip byte-identically.
LaurentPoly parse_laurent(const std::string& text, const Context& ctx);

// Fixed serialization settings for every document: two-space indent plus a
// trailing newline, so byte-identity is meaningful across runs.
std::string dump_json(const Json& doc);

Json rep_to_json(const Representation& rep);
Json rep_to_json(const SpecializedRep& rep);
Representation rep_from_json(const Json& doc);

Json certificate_to_json(const IrredCertificate& cert);
Json report_to_json(const TheoremReport& report);

// LaTeX rendering (pmatrix per generator) for eyeball comparison.
std::string rep_to_latex(const Representation& rep);

}  // namespace bgx
