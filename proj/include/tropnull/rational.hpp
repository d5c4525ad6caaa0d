#pragma once

// Exact rational scalars and points. Everything that feeds a decision is
// carried as mpq_class; never store a gmpxx expression in `auto`.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropnull {

using Rational = mpq_class;
using Point = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (no whitespace, q != 0). Throws Error(SyntaxError).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Point& p);

bool is_integer(const Rational& q);
long ceil_to_long(const Rational& q);
long floor_to_long(const Rational& q);

Rational dot(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Rational& s, const Point& p);
Point zero_point(std::size_t n);

/// Decimal approximation, for presentation only (SVG, human output).
double approx(const Rational& q);

}  // namespace tropnull
