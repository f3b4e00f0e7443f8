#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bgx {

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator by the backend, so streaming one prints the canonical
// "p" / "p/q" form used throughout the JSON documents.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
Rational parse_rational(const std::string& text);

// x^e for possibly negative e; throws std::domain_error on 0^negative.
Rational rational_pow(const Rational& x, int e);

}  // namespace bgx
