#pragma once

// Exact rational linear programming.
//
// Two entry points share one simplex engine:
//   * solve_standard: min cost·y  s.t.  rows·y = rhs, y >= 0.
//   * solve / strict_interior: LPs over a Polyhedron (free variables,
//     constraints ⟨normal,x⟩ >= bound, optionally strict). These are solved
//     through their dual, which has one row per variable, so the tableau stays
//     small even when a polyhedron carries many constraints.
// Pivoting uses Bland's lowest-index rule in both phases.

#include "tropnull/rational.hpp"

#include <optional>
#include <vector>

namespace tropnull::lp {

struct Constraint {
    Point normal;
    Rational bound;
    bool strict = false;
};

/// {x : ⟨normal_i, x⟩ >= bound_i (> when strict)}.
class Polyhedron {
public:
    explicit Polyhedron(std::size_t n) : n_(n) {}
    Polyhedron(std::size_t n, std::vector<Constraint> constraints);

    std::size_t n() const { return n_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    /// ⟨normal, x⟩ >= bound.
    void add_at_least(Point normal, Rational bound);
    void add_greater(Point normal, Rational bound);
    /// ⟨normal, x⟩ = bound, stored as two opposite inequalities.
    void add_equal(const Point& normal, const Rational& bound);
    void append(const Polyhedron& other);

    bool contains(const Point& x) const;
    bool has_strict() const;
    /// Every constraint turned strict (the interior).
    Polyhedron interior() const;

private:
    std::size_t n_;
    std::vector<Constraint> constraints_;
};

enum class Status { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

const char* to_string(Status s);

struct LPResult {
    Status status = Status::Infeasible;
    Rational value;
    Point witness;
};

/// Optimizes objective over P. P must not contain strict constraints.
/// Throws DimensionMismatch / InvariantViolation.
LPResult solve(const Point& objective, const Polyhedron& p, Sense sense);

/// A point satisfying every constraint, strict ones strictly; nullopt if none.
/// Maximizes a common slack δ <= 1 on the strict constraints.
std::optional<Point> strict_interior(const Polyhedron& p);

bool is_full_dim(const Polyhedron& p);

/// Maximal linearly independent subset of {p_i - p_0}. Throws EmptyInput.
std::vector<Point> affine_directions(const std::vector<Point>& points);

/// Rank of a set of vectors, by exact elimination.
std::size_t rank(const std::vector<Point>& vectors);

struct StandardForm {
    std::size_t columns = 0;
    std::vector<Point> rows;  // each of length `columns`
    Point rhs;                // one entry per row
    Point cost;               // length `columns`
};

struct StandardResult {
    Status status = Status::Infeasible;
    Rational value;
    Point solution;     // y, length `columns`
    Point multipliers;  // π with π·rows_j <= cost_j at optimality, one per row
};

StandardResult solve_standard(const StandardForm& lp);

}  // namespace tropnull::lp
