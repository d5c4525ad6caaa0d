#pragma once

// Newton polytopes in V-representation. Every query is an LP; the hull is
// never materialized.

#include "tropnull/core.hpp"

#include <optional>
#include <vector>

namespace tropnull::newton {

struct NewtonPolytope {
    std::vector<Point> support;  // nonempty

    std::size_t n() const { return support.front().size(); }
};

/// Exponents of canonicalize(f).
NewtonPolytope newton_polytope(const TropFunction& f);

/// q ∈ conv(support). Throws DimensionMismatch.
bool contains(const NewtonPolytope& p, const Point& q);

/// Dimension of the affine hull.
std::size_t dimension(const NewtonPolytope& p);

/// Direction space of aff(inner) lies inside that of aff(outer).
bool directions_contained(const NewtonPolytope& inner, const NewtonPolytope& outer);

/// Least real m >= 0 such that some translate of `inner` fits in m·outer.
std::optional<Rational> min_dilation_fit(const NewtonPolytope& inner, const NewtonPolytope& outer);

/// ceil(max(min_dilation_fit, 1)); every integer m at or above it fits.
std::optional<long> fits_eventually(const NewtonPolytope& inner, const NewtonPolytope& outer);

/// A translate t with t + inner ⊆ m·outer at fixed m, if any (LP vertex).
std::optional<Point> translate_at(const NewtonPolytope& inner, const NewtonPolytope& outer, long m);

/// t + inner ⊆ m·outer for the given t and m.
bool translate_fits(const NewtonPolytope& inner, const NewtonPolytope& outer, const Point& t, long m);

/// Translates realizable by a tropical monomial cofactor: t ∈ Z^n, t >= 0.
///
/// Such a translate exists for some m exactly when a real one does and every
/// coordinate that is identically zero on `outer` is also zero on `inner`.
bool monomial_fit_exists(const NewtonPolytope& inner, const NewtonPolytope& outer);

struct MonomialFit {
    long m = 0;
    Point translate;  // nonnegative integers
};

/// Smallest m (searched upward from fits_eventually) admitting a nonnegative
/// integral translate, together with one such translate.
std::optional<MonomialFit> min_monomial_fit(const NewtonPolytope& inner, const NewtonPolytope& outer);

}  // namespace tropnull::newton
