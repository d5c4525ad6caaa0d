#pragma once

/**
 * @file core.hpp
 * @brief Tropical (max-plus) polynomials over the reals and over the
 * extended semiring T = R ∪ R^ν.
 *
 * A TropFunction is the function x ↦ max_ω (⟨x,ω⟩ + c_ω) over a finite,
 * nonempty term list. Over T each coefficient carries a tag; evaluation
 * yields a ν-tagged value whenever the maximum is attained more than once or
 * by a ν-tagged term:
 *
 *     "a + b"   = max(a,b) if a != b,   a^ν if a == b
 *     "a + b^ν" = a if a > b,           b^ν if a <= b
 *     "a b^ν"   = (a+b)^ν
 *
 * All objects are immutable values; every operation is a pure function.
 */

#include "tropnull/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tropnull {

enum class Tag { Real, Nu };
enum class Semiring { R, T };

/// Exponent domain of a function, ordered from strongest to weakest.
enum class Flavor { Poly, Laurent, Plq };

const char* to_string(Tag tag);
const char* to_string(Semiring s);
const char* to_string(Flavor f);

/// The weaker of two flavors (Poly < Laurent < Plq).
Flavor weakest(Flavor a, Flavor b);

struct ExtScalar {
    Rational value;
    Tag tag = Tag::Real;

    bool is_nu() const { return tag == Tag::Nu; }
    friend bool operator==(const ExtScalar&, const ExtScalar&) = default;
};

/// Semiring sum. Over R the tag is always Real.
ExtScalar semiring_add(const ExtScalar& a, const ExtScalar& b, Semiring s);
/// Semiring product; ν is absorbing for the tag.
ExtScalar semiring_mul(const ExtScalar& a, const ExtScalar& b, Semiring s);
/// The projection π : T → R.
inline ExtScalar project(const ExtScalar& a) { return {a.value, Tag::Real}; }

std::string to_string(const ExtScalar& a);

struct Term {
    Point exponent;
    ExtScalar coefficient;

    /// ⟨x, exponent⟩ + value(coefficient)
    Rational value_at(const Point& x) const;
    friend bool operator==(const Term&, const Term&) = default;
};

class TropFunction {
public:
    /// Validating constructor; see make_function.
    TropFunction(std::size_t n, Flavor flavor, Semiring semiring, std::vector<Term> terms);

    std::size_t n() const { return n_; }
    Flavor flavor() const { return flavor_; }
    Semiring semiring() const { return semiring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const TropFunction&, const TropFunction&) = default;

private:
    std::size_t n_;
    Flavor flavor_;
    Semiring semiring_;
    std::vector<Term> terms_;
};

/// Throws EmptySupport, FlavorViolation, TagViolation or DimensionMismatch.
TropFunction make_function(std::size_t n, Flavor flavor, Semiring semiring, std::vector<Term> terms);

/// Convenience for tests and tools: a single term with a Real coefficient.
Term term(Point exponent, Rational coefficient, Tag tag = Tag::Real);

ExtScalar eval(const TropFunction& f, const Point& x);

/// At most one term per exponent, merged by semiring addition; sorted by exponent.
TropFunction canonicalize(const TropFunction& f);
/// True when f already equals canonicalize(f).
bool is_canonical(const TropFunction& f);

TropFunction trop_add(const TropFunction& f, const TropFunction& g);
TropFunction trop_mul(const TropFunction& f, const TropFunction& g);
/// "F^m" = mF; scales exponents and coefficient values, keeps tags.
TropFunction trop_pow(const TropFunction& f, long m);
/// π_* : forget tags, move to semiring R, canonicalize.
TropFunction project(const TropFunction& f);

/// Same function re-labelled with a weaker flavor (e.g. a polynomial viewed
/// as a Laurent polynomial).
TropFunction with_flavor(const TropFunction& f, Flavor flavor);

/// f + ⟨shift, x⟩ : multiplication by the tropical monomial x^shift.
TropFunction shift_exponents(const TropFunction& f, const Point& shift, Flavor flavor);

/// f + c ("multiplication" by the constant c).
TropFunction add_constant(const TropFunction& f, const Rational& c);

std::string to_string(const TropFunction& f);

}  // namespace tropnull
