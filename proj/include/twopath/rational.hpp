#pragma once

#include <gmpxx.h>

#include <string>

namespace twopath {

// Arbitrary-precision rational, always kept canonical (positive denominator,
// lowest terms) by GMP.
using Rational = mpq_class;

// Renders as "p/q" even for integers ("2/1"), so CSV consumers see one shape.
std::string to_fraction_string(const Rational& value);

// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

inline Rational reciprocal(std::size_t d) { return Rational(1, static_cast<unsigned long>(d)); }

}  // namespace twopath
