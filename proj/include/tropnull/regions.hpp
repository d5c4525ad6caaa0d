#pragma once

// Amoebas (corner loci) and the components of their complements.
//
// For a canonical F every component of R^n \ A(F) is the open set on which a
// single term strictly beats all others, so a decomposition is one LP per
// term; terms whose dominance set is lower-dimensional own no region.
// All comparisons here use π-projected values; tags ride along untouched.

#include "tropnull/core.hpp"
#include "tropnull/lp.hpp"

#include <optional>
#include <vector>

namespace tropnull {

struct DominantTerm {
    std::size_t term_index = 0;  // into the canonical form of the function
    Point exponent;              // the gradient on the region
    ExtScalar coefficient;
};

struct Region {
    std::size_t term_index = 0;
    Point exponent;
    ExtScalar coefficient;
    lp::Polyhedron poly{1};  // all constraints strict
    Point interior_point;
};

struct RegionDecomposition {
    TropFunction function;  // canonical form the indices refer to
    std::vector<Region> regions;  // sorted by exponent
};

/// {x : term `index` of f > every other term}, strict constraints.
lp::Polyhedron dominance_polyhedron(const TropFunction& f, std::size_t index);

RegionDecomposition decompose(const TropFunction& f);

/// The term of G that dominates all of D, if G is affine on D.
/// Throws NotFullDimensional when D has empty interior.
std::optional<DominantTerm> linear_on(const TropFunction& g, const lp::Polyhedron& d);

/// G(x) >= H(x) everywhere (tags ignored). Throws DimensionMismatch.
bool dominates(const TropFunction& g, const TropFunction& h);
/// A point with H(x) > G(x), or nullopt when G dominates H.
std::optional<Point> excess_point(const TropFunction& g, const TropFunction& h);

/// min_x (G(x) - ⟨ω,x⟩); nullopt when unbounded below (ω outside Δ(G)).
std::optional<Rational> concave_coefficient(const TropFunction& g, const Point& omega);

/// Largest c with G >= H + c, or nullopt when Δ(H) ⊄ Δ(G).
std::optional<Rational> shift_constant(const TropFunction& g, const TropFunction& h);

/// x lies on A(F): at least two distinct-exponent terms attain the max.
bool on_amoeba(const TropFunction& f, const Point& x);

struct BoundingBox {
    Rational x0, y0, x1, y1;
};

struct Segment {
    Point from;
    Point to;
    std::size_t region_a = 0;
    std::size_t region_b = 0;
};

/// One segment per pair of regions whose closures share an edge inside bbox.
/// Throws WrongDimension unless n == 2.
std::vector<Segment> amoeba_segments_2d(const TropFunction& f, const BoundingBox& bbox);

}  // namespace tropnull
