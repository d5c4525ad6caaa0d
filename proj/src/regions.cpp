#include "tropnull/regions.hpp"

#include "tropnull/error.hpp"
#include "tropnull/newton.hpp"

namespace tropnull {

namespace {

// t(x) > s(x)  ⟺  ⟨ω_t - ω_s, x⟩ > c_s - c_t
void add_beats(lp::Polyhedron& p, const Term& t, const Term& s, bool strict) {
    Point normal = sub(t.exponent, s.exponent);
    Rational bound = s.coefficient.value - t.coefficient.value;
    if (strict) p.add_greater(std::move(normal), std::move(bound));
    else p.add_at_least(std::move(normal), std::move(bound));
}

}  // namespace

lp::Polyhedron dominance_polyhedron(const TropFunction& f, std::size_t index) {
    lp::Polyhedron p(f.n());
    const Term& t = f.terms().at(index);
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (s != index) add_beats(p, t, f.terms()[s], true);
    }
    return p;
}

RegionDecomposition decompose(const TropFunction& f) {
    RegionDecomposition out{canonicalize(f), {}};
    const TropFunction& g = out.function;
    for (std::size_t i = 0; i < g.size(); ++i) {
        lp::Polyhedron poly = dominance_polyhedron(g, i);
        std::optional<Point> inside = lp::strict_interior(poly);
        if (!inside) continue;
        const Term& t = g.terms()[i];
        out.regions.push_back(Region{i, t.exponent, t.coefficient, std::move(poly), std::move(*inside)});
    }
    return out;
}

std::optional<DominantTerm> linear_on(const TropFunction& g, const lp::Polyhedron& d) {
    if (d.n() != g.n()) throw Error(ErrorKind::DimensionMismatch, "region and function differ in dimension");
    std::optional<Point> inside = lp::strict_interior(d.interior());
    if (!inside) throw Error(ErrorKind::NotFullDimensional, "linearity is only defined on open regions");
    const TropFunction c = canonicalize(g);

    // Only a term attaining the max at an interior point can dominate all of D.
    Rational best = c.terms().front().value_at(*inside);
    for (const Term& t : c.terms()) {
        Rational v = t.value_at(*inside);
        if (v > best) best = v;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Term& t = c.terms()[i];
        if (t.value_at(*inside) != best) continue;
        bool dominant = true;
        for (std::size_t s = 0; s < c.size() && dominant; ++s) {
            if (s == i) continue;
            lp::Polyhedron probe = d.interior();
            add_beats(probe, c.terms()[s], t, true);
            dominant = !lp::strict_interior(probe).has_value();
        }
        if (dominant) return DominantTerm{i, t.exponent, t.coefficient};
    }
    return std::nullopt;
}

std::optional<Point> excess_point(const TropFunction& g, const TropFunction& h) {
    if (g.n() != h.n()) throw Error(ErrorKind::DimensionMismatch, "functions in different variable counts");
    for (const Term& t : h.terms()) {
        bool covered = false;
        for (const Term& s : g.terms()) {
            if (s.exponent == t.exponent && s.coefficient.value >= t.coefficient.value) {
                covered = true;
                break;
            }
        }
        if (covered) continue;
        lp::Polyhedron above(g.n());
        for (const Term& s : g.terms()) add_beats(above, t, s, true);
        if (std::optional<Point> x = lp::strict_interior(above)) return x;
    }
    return std::nullopt;
}

bool dominates(const TropFunction& g, const TropFunction& h) { return !excess_point(g, h).has_value(); }

std::optional<Rational> concave_coefficient(const TropFunction& g, const Point& omega) {
    if (omega.size() != g.n()) throw Error(ErrorKind::DimensionMismatch, "exponent has wrong length");
    // Variables (x, s): minimize s subject to s - ⟨ω_t - ω, x⟩ >= c_t.
    const std::size_t n = g.n();
    lp::Polyhedron p(n + 1);
    for (const Term& t : g.terms()) {
        Point normal = scale(Rational(-1), sub(t.exponent, omega));
        normal.push_back(Rational(1));
        p.add_at_least(std::move(normal), t.coefficient.value);
    }
    Point objective = zero_point(n + 1);
    objective[n] = 1;
    lp::LPResult r = lp::solve(objective, p, lp::Sense::Minimize);
    if (r.status != lp::Status::Optimal) return std::nullopt;
    return r.value;
}

std::optional<Rational> shift_constant(const TropFunction& g, const TropFunction& h) {
    if (g.n() != h.n()) throw Error(ErrorKind::DimensionMismatch, "functions in different variable counts");
    const newton::NewtonPolytope dg = newton::newton_polytope(g);
    std::optional<Rational> best;
    for (const Term& t : h.terms()) {
        if (!newton::contains(dg, t.exponent)) return std::nullopt;
        std::optional<Rational> a = concave_coefficient(g, t.exponent);
        if (!a) return std::nullopt;
        Rational c = *a - t.coefficient.value;
        if (!best || c < *best) best = c;
    }
    return best;
}

bool on_amoeba(const TropFunction& f, const Point& x) {
    const TropFunction c = canonicalize(f);
    Rational best = c.terms().front().value_at(x);
    std::size_t hits = 0;
    for (const Term& t : c.terms()) {
        Rational v = t.value_at(x);
        if (v > best) {
            best = v;
            hits = 1;
        } else if (v == best) {
            ++hits;
        }
    }
    return hits >= 2;
}

std::vector<Segment> amoeba_segments_2d(const TropFunction& f, const BoundingBox& bbox) {
    if (f.n() != 2) throw Error(ErrorKind::WrongDimension, "amoeba segments need exactly two variables");
    const RegionDecomposition dec = decompose(f);
    const TropFunction& g = dec.function;
    std::vector<Segment> out;
    for (std::size_t a = 0; a < dec.regions.size(); ++a) {
        for (std::size_t b = a + 1; b < dec.regions.size(); ++b) {
            const Term& ta = g.terms()[dec.regions[a].term_index];
            const Term& tb = g.terms()[dec.regions[b].term_index];
            lp::Polyhedron edge(2);
            for (const Term& s : g.terms()) {
                add_beats(edge, ta, s, false);
                add_beats(edge, tb, s, false);
            }
            edge.add_at_least(Point{1, 0}, bbox.x0);
            edge.add_at_least(Point{-1, 0}, -bbox.x1);
            edge.add_at_least(Point{0, 1}, bbox.y0);
            edge.add_at_least(Point{0, -1}, -bbox.y1);
            // The tie line ta = tb runs along d ⟂ (ω_a - ω_b).
            const Point diff = sub(ta.exponent, tb.exponent);
            const Point along{-diff[1], diff[0]};
            lp::LPResult hi = lp::solve(along, edge, lp::Sense::Maximize);
            if (hi.status != lp::Status::Optimal) continue;
            lp::LPResult lo = lp::solve(along, edge, lp::Sense::Minimize);
            if (lo.witness == hi.witness) continue;
            out.push_back(Segment{lo.witness, hi.witness, a, b});
        }
    }
    return out;
}

}  // namespace tropnull
