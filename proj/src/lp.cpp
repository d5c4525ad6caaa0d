#include "tropnull/lp.hpp"

#include "tropnull/error.hpp"

namespace tropnull::lp {

const char* to_string(Status s) {
    switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    }
    return "?";
}

Polyhedron::Polyhedron(std::size_t n, std::vector<Constraint> constraints)
    : n_(n), constraints_(std::move(constraints)) {
    for (const Constraint& c : constraints_) {
        if (c.normal.size() != n_) throw Error(ErrorKind::DimensionMismatch, "constraint normal has wrong length");
    }
}

void Polyhedron::add_at_least(Point normal, Rational bound) {
    if (normal.size() != n_) throw Error(ErrorKind::DimensionMismatch, "constraint normal has wrong length");
    constraints_.push_back(Constraint{std::move(normal), std::move(bound), false});
}

void Polyhedron::add_greater(Point normal, Rational bound) {
    if (normal.size() != n_) throw Error(ErrorKind::DimensionMismatch, "constraint normal has wrong length");
    constraints_.push_back(Constraint{std::move(normal), std::move(bound), true});
}

void Polyhedron::add_equal(const Point& normal, const Rational& bound) {
    add_at_least(normal, bound);
    Rational neg = -bound;
    add_at_least(scale(Rational(-1), normal), neg);
}

void Polyhedron::append(const Polyhedron& other) {
    if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "cannot intersect polyhedra of different dimension");
    constraints_.insert(constraints_.end(), other.constraints_.begin(), other.constraints_.end());
}

bool Polyhedron::contains(const Point& x) const {
    for (const Constraint& c : constraints_) {
        Rational lhs = dot(c.normal, x);
        if (c.strict ? !(lhs > c.bound) : lhs < c.bound) return false;
    }
    return true;
}

bool Polyhedron::has_strict() const {
    for (const Constraint& c : constraints_) {
        if (c.strict) return true;
    }
    return false;
}

Polyhedron Polyhedron::interior() const {
    Polyhedron open = *this;
    for (Constraint& c : open.constraints_) c.strict = true;
    return open;
}

namespace {

// Dense simplex tableau over rows·y = rhs with one artificial per row.
class Tableau {
public:
    explicit Tableau(const StandardForm& lp)
        : rows_(lp.rows.size()), cols_(lp.columns), width_(lp.columns + lp.rows.size() + 1),
          data_(rows_, Point(width_, Rational(0))), objective_(width_, Rational(0)), basis_(rows_),
          sign_(rows_, 1) {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (lp.rows[r].size() != cols_) throw Error(ErrorKind::DimensionMismatch, "standard-form row has wrong length");
            sign_[r] = sgn(lp.rhs[r]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(lp.rows[r][j]) != 0) data_[r][j] = sign_[r] > 0 ? Rational(lp.rows[r][j]) : Rational(-lp.rows[r][j]);
            }
            data_[r][cols_ + r] = 1;
            data_[r][rhs_col()] = sign_[r] > 0 ? Rational(lp.rhs[r]) : Rational(-lp.rhs[r]);
            basis_[r] = cols_ + r;
        }
    }

    StandardResult run(const StandardForm& lp) {
        StandardResult result;
        // Phase 1: minimize the sum of artificials.
        for (std::size_t k = 0; k < width_; ++k) {
            if (k >= cols_ && k < rhs_col()) continue;
            Rational s = 0;
            for (std::size_t r = 0; r < rows_; ++r) s -= data_[r][k];
            objective_[k] = s;
        }
        iterate(width_ - 1);
        if (sgn(objective_[rhs_col()]) != 0) {  // phase-1 optimum = -objective_[rhs] > 0
            result.status = Status::Infeasible;
            return result;
        }
        drive_out_artificials();

        // Phase 2 on the original cost; artificials may no longer enter.
        for (std::size_t k = 0; k < width_; ++k) {
            Rational s = k < cols_ ? Rational(lp.cost[k]) : Rational(0);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (basis_[r] < cols_ && sgn(lp.cost[basis_[r]]) != 0) s -= lp.cost[basis_[r]] * data_[r][k];
            }
            objective_[k] = s;
        }
        if (!iterate(cols_)) {
            result.status = Status::Unbounded;
            return result;
        }
        result.status = Status::Optimal;
        result.value = -objective_[rhs_col()];
        result.solution.assign(cols_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < cols_) result.solution[basis_[r]] = data_[r][rhs_col()];
        }
        result.multipliers.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Rational pi = -objective_[cols_ + r];
            result.multipliers[r] = sign_[r] > 0 ? pi : Rational(-pi);
        }
        return result;
    }

private:
    std::size_t rhs_col() const { return width_ - 1; }

    // Returns false on unboundedness. Columns >= limit never enter.
    bool iterate(std::size_t limit) {
        for (;;) {
            std::size_t entering = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(objective_[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == limit) return true;

            std::size_t leaving = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (sgn(data_[r][entering]) <= 0) continue;
                Rational ratio = data_[r][rhs_col()] / data_[r][entering];
                if (leaving == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            if (leaving == rows_) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        Point& prow = data_[r];
        const Rational piv = prow[j];
        for (std::size_t k = 0; k < width_; ++k) {
            if (sgn(prow[k]) != 0) prow[k] /= piv;
        }
        auto eliminate = [&](Point& row) {
            if (sgn(row[j]) == 0) return;
            const Rational f = row[j];
            for (std::size_t k = 0; k < width_; ++k) {
                if (sgn(prow[k]) != 0) row[k] -= f * prow[k];
            }
        };
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != r) eliminate(data_[i]);
        }
        eliminate(objective_);
        basis_[r] = j;
    }

    // Basic artificials sit at level zero after a successful phase 1. Pivot
    // each onto a structural column when possible; otherwise the row is
    // redundant and stays inert (all structural entries zero).
    void drive_out_artificials() {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < cols_) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(data_[r][j]) != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t width_;
    std::vector<Point> data_;
    Point objective_;
    std::vector<std::size_t> basis_;
    std::vector<int> sign_;
};

// Dual of  max c·x s.t. A x >= b (x free):  min -b·z s.t. -Aᵀ z = c, z >= 0.
// The dual's simplex multipliers are an optimal primal point.
StandardResult solve_dual(const Point& objective, const Polyhedron& p) {
    StandardForm dual;
    const auto& cons = p.constraints();
    dual.columns = cons.size();
    dual.rows.assign(p.n(), Point(cons.size(), Rational(0)));
    dual.rhs = objective;
    dual.cost.resize(cons.size());
    for (std::size_t j = 0; j < cons.size(); ++j) {
        for (std::size_t r = 0; r < p.n(); ++r) {
            if (sgn(cons[j].normal[r]) != 0) dual.rows[r][j] = -cons[j].normal[r];
        }
        dual.cost[j] = -cons[j].bound;
    }
    return solve_standard(dual);
}

}  // namespace

StandardResult solve_standard(const StandardForm& lp) {
    if (lp.rhs.size() != lp.rows.size() || lp.cost.size() != lp.columns) {
        throw Error(ErrorKind::DimensionMismatch, "inconsistent standard-form LP");
    }
    Tableau t(lp);
    return t.run(lp);
}

LPResult solve(const Point& objective, const Polyhedron& p, Sense sense) {
    if (objective.size() != p.n()) throw Error(ErrorKind::DimensionMismatch, "objective length differs from dimension");
    if (p.has_strict()) throw Error(ErrorKind::InvariantViolation, "solve() takes closed polyhedra only");

    const Point c = sense == Sense::Maximize ? objective : scale(Rational(-1), objective);
    LPResult out;
    StandardResult dual = solve_dual(c, p);
    if (dual.status == Status::Unbounded) {
        out.status = Status::Infeasible;
        return out;
    }
    if (dual.status == Status::Infeasible) {
        // Primal is infeasible or unbounded; the zero objective tells which.
        StandardResult feas = solve_dual(zero_point(p.n()), p);
        out.status = feas.status == Status::Optimal ? Status::Unbounded : Status::Infeasible;
        return out;
    }
    out.status = Status::Optimal;
    out.witness = std::move(dual.multipliers);
    out.value = dot(objective, out.witness);
    return out;
}

std::optional<Point> strict_interior(const Polyhedron& p) {
    if (!p.has_strict()) {
        LPResult r = solve(zero_point(p.n()), p, Sense::Maximize);
        if (r.status != Status::Optimal) return std::nullopt;
        return r.witness;
    }
    // Variables (x, δ): strict rows become ⟨a,x⟩ - δ >= b; plus δ <= 1.
    const std::size_t n = p.n();
    Polyhedron lifted(n + 1);
    for (const Constraint& c : p.constraints()) {
        Point normal = c.normal;
        normal.push_back(c.strict ? Rational(-1) : Rational(0));
        lifted.add_at_least(std::move(normal), c.bound);
    }
    Point cap = zero_point(n + 1);
    cap[n] = -1;
    lifted.add_at_least(cap, Rational(-1));

    Point objective = zero_point(n + 1);
    objective[n] = 1;
    LPResult r = solve(objective, lifted, Sense::Maximize);
    if (r.status != Status::Optimal || sgn(r.value) <= 0) return std::nullopt;
    r.witness.pop_back();
    return r.witness;
}

bool is_full_dim(const Polyhedron& p) { return strict_interior(p.interior()).has_value(); }

namespace {

// Incremental row echelon basis; insert() reports independence.
class EchelonBasis {
public:
    bool insert(Point v) {
        for (const auto& [pivot, row] : rows_) {
            if (sgn(v[pivot]) == 0) continue;
            const Rational f = v[pivot] / row[pivot];
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (sgn(row[k]) != 0) v[k] -= f * row[k];
            }
        }
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (sgn(v[k]) != 0) {
                rows_.emplace_back(k, std::move(v));
                return true;
            }
        }
        return false;
    }
    std::size_t size() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, Point>> rows_;
};

}  // namespace

std::vector<Point> affine_directions(const std::vector<Point>& points) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "affine hull of an empty point set");
    EchelonBasis basis;
    std::vector<Point> out;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != points[0].size()) throw Error(ErrorKind::DimensionMismatch, "points of mixed dimension");
        Point d = sub(points[i], points[0]);
        if (basis.insert(d)) out.push_back(std::move(d));
    }
    return out;
}

std::size_t rank(const std::vector<Point>& vectors) {
    EchelonBasis basis;
    for (const Point& v : vectors) basis.insert(v);
    return basis.size();
}

}  // namespace tropnull::lp
