#include "tropnull/newton.hpp"

#include "tropnull/error.hpp"
#include "tropnull/lp.hpp"

#include <algorithm>
#include <set>

namespace tropnull::newton {

namespace {

void require_same_n(const NewtonPolytope& a, const NewtonPolytope& b) {
    if (a.support.empty() || b.support.empty()) throw Error(ErrorKind::EmptyInput, "empty Newton polytope");
    if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "Newton polytopes of different dimension");
}

std::vector<Point> distinct(const std::vector<Point>& pts) {
    std::set<Point> seen(pts.begin(), pts.end());
    return {seen.begin(), seen.end()};
}

// Variables: t+ (n), t- (n), [m], μ_{w,p}. For every inner point ω_w:
//   t + ω_w = Σ_p μ_{w,p} p,   Σ_p μ_{w,p} = m.
struct FitLayout {
    std::size_t n, inner, outer;
    bool free_m;
    std::size_t tp(std::size_t j) const { return j; }
    std::size_t tm(std::size_t j) const { return n + j; }
    std::size_t m() const { return 2 * n; }
    std::size_t mu(std::size_t w, std::size_t p) const { return 2 * n + (free_m ? 1 : 0) + w * outer + p; }
    std::size_t columns() const { return 2 * n + (free_m ? 1 : 0) + inner * outer; }
};

lp::StandardForm fit_lp(const std::vector<Point>& inner, const std::vector<Point>& outer, const FitLayout& L,
                        const Rational& fixed_m) {
    lp::StandardForm f;
    f.columns = L.columns();
    f.cost.assign(f.columns, Rational(0));
    for (std::size_t w = 0; w < inner.size(); ++w) {
        for (std::size_t j = 0; j < L.n; ++j) {
            Point row(f.columns, Rational(0));
            row[L.tp(j)] = 1;
            row[L.tm(j)] = -1;
            for (std::size_t p = 0; p < outer.size(); ++p) {
                if (sgn(outer[p][j]) != 0) row[L.mu(w, p)] = -outer[p][j];
            }
            f.rows.push_back(std::move(row));
            f.rhs.push_back(-inner[w][j]);
        }
        Point row(f.columns, Rational(0));
        for (std::size_t p = 0; p < outer.size(); ++p) row[L.mu(w, p)] = 1;
        if (L.free_m) {
            row[L.m()] = -1;
            f.rhs.push_back(Rational(0));
        } else {
            f.rhs.push_back(fixed_m);
        }
        f.rows.push_back(std::move(row));
    }
    return f;
}

Point translate_of(const lp::StandardResult& r, const FitLayout& L) {
    Point t(L.n);
    for (std::size_t j = 0; j < L.n; ++j) t[j] = r.solution[L.tp(j)] - r.solution[L.tm(j)];
    return t;
}

bool nonnegative_integral(const Point& t) {
    return std::all_of(t.begin(), t.end(), [](const Rational& v) { return is_integer(v) && sgn(v) >= 0; });
}

}  // namespace

NewtonPolytope newton_polytope(const TropFunction& f) {
    NewtonPolytope p;
    const TropFunction c = canonicalize(f);
    for (const Term& t : c.terms()) p.support.push_back(t.exponent);
    return p;
}

bool contains(const NewtonPolytope& p, const Point& q) {
    if (p.support.empty()) throw Error(ErrorKind::EmptyInput, "empty Newton polytope");
    if (q.size() != p.n()) throw Error(ErrorKind::DimensionMismatch, "query point has wrong dimension");
    lp::StandardForm f;
    f.columns = p.support.size();
    f.cost.assign(f.columns, Rational(0));
    for (std::size_t j = 0; j < q.size(); ++j) {
        Point row(f.columns);
        for (std::size_t k = 0; k < f.columns; ++k) row[k] = p.support[k][j];
        f.rows.push_back(std::move(row));
        f.rhs.push_back(q[j]);
    }
    f.rows.emplace_back(f.columns, Rational(1));
    f.rhs.emplace_back(1);
    return lp::solve_standard(f).status == lp::Status::Optimal;
}

std::size_t dimension(const NewtonPolytope& p) { return lp::affine_directions(p.support).size(); }

bool directions_contained(const NewtonPolytope& inner, const NewtonPolytope& outer) {
    require_same_n(inner, outer);
    std::vector<Point> outer_dirs = lp::affine_directions(outer.support);
    const std::size_t base = outer_dirs.size();
    for (Point& d : lp::affine_directions(inner.support)) outer_dirs.push_back(std::move(d));
    return lp::rank(outer_dirs) == base;
}

std::optional<Rational> min_dilation_fit(const NewtonPolytope& inner, const NewtonPolytope& outer) {
    require_same_n(inner, outer);
    if (!directions_contained(inner, outer)) return std::nullopt;
    const std::vector<Point> in = distinct(inner.support);
    const std::vector<Point> out = distinct(outer.support);
    const FitLayout layout{inner.n(), in.size(), out.size(), true};
    lp::StandardForm f = fit_lp(in, out, layout, Rational(0));
    f.cost[layout.m()] = 1;
    lp::StandardResult r = lp::solve_standard(f);
    if (r.status != lp::Status::Optimal) return std::nullopt;
    return r.value;
}

std::optional<long> fits_eventually(const NewtonPolytope& inner, const NewtonPolytope& outer) {
    std::optional<Rational> m0 = min_dilation_fit(inner, outer);
    if (!m0) return std::nullopt;
    return std::max(1L, ceil_to_long(*m0));
}

std::optional<Point> translate_at(const NewtonPolytope& inner, const NewtonPolytope& outer, long m) {
    require_same_n(inner, outer);
    const std::vector<Point> in = distinct(inner.support);
    const std::vector<Point> out = distinct(outer.support);
    const FitLayout layout{inner.n(), in.size(), out.size(), false};
    lp::StandardResult r = lp::solve_standard(fit_lp(in, out, layout, Rational(m)));
    if (r.status != lp::Status::Optimal) return std::nullopt;
    return translate_of(r, layout);
}

bool translate_fits(const NewtonPolytope& inner, const NewtonPolytope& outer, const Point& t, long m) {
    require_same_n(inner, outer);
    NewtonPolytope dilated;
    for (const Point& p : outer.support) dilated.support.push_back(scale(Rational(m), p));
    for (const Point& w : distinct(inner.support)) {
        if (!contains(dilated, add(t, w))) return false;
    }
    return true;
}

bool monomial_fit_exists(const NewtonPolytope& inner, const NewtonPolytope& outer) {
    if (!fits_eventually(inner, outer)) return false;
    for (std::size_t j = 0; j < outer.n(); ++j) {
        const bool outer_zero =
            std::all_of(outer.support.begin(), outer.support.end(), [j](const Point& p) { return sgn(p[j]) == 0; });
        if (!outer_zero) continue;
        const bool inner_zero =
            std::all_of(inner.support.begin(), inner.support.end(), [j](const Point& p) { return sgn(p[j]) == 0; });
        if (!inner_zero) return false;
    }
    return true;
}

namespace {

constexpr std::size_t kEnumerationCap = 4096;

// Nonnegative integral translate at fixed m by enumerating the integer points
// of the bounding box of all real translates. Gives up above the cap.
std::optional<Point> integral_translate_at(const std::vector<Point>& in, const std::vector<Point>& out,
                                           const NewtonPolytope& inner, const NewtonPolytope& outer, long m) {
    const std::size_t n = inner.n();
    const FitLayout layout{n, in.size(), out.size(), false};
    lp::StandardForm f = fit_lp(in, out, layout, Rational(m));
    lp::StandardResult vertex = lp::solve_standard(f);
    if (vertex.status != lp::Status::Optimal) return std::nullopt;
    Point t = translate_of(vertex, layout);
    if (nonnegative_integral(t)) return t;

    std::vector<long> lo(n), hi(n);
    std::size_t count = 1;
    for (std::size_t j = 0; j < n; ++j) {
        for (int dir : {1, -1}) {
            lp::StandardForm g = f;
            g.cost[layout.tp(j)] = dir;
            g.cost[layout.tm(j)] = -dir;
            lp::StandardResult r = lp::solve_standard(g);
            if (r.status != lp::Status::Optimal) return std::nullopt;
            const Rational tj = r.solution[layout.tp(j)] - r.solution[layout.tm(j)];
            if (dir > 0) lo[j] = std::max(0L, ceil_to_long(tj));
            else hi[j] = floor_to_long(tj);
        }
        if (lo[j] > hi[j]) return std::nullopt;
        count *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
        if (count > kEnumerationCap) return std::nullopt;
    }
    std::vector<long> cur = lo;
    for (;;) {
        Point cand(n);
        for (std::size_t j = 0; j < n; ++j) cand[j] = cur[j];
        if (translate_fits(inner, outer, cand, m)) return cand;
        std::size_t j = 0;
        while (j < n && cur[j] == hi[j]) cur[j] = lo[j], ++j;
        if (j == n) return std::nullopt;
        ++cur[j];
    }
}

}  // namespace

std::optional<MonomialFit> min_monomial_fit(const NewtonPolytope& inner, const NewtonPolytope& outer) {
    if (!monomial_fit_exists(inner, outer)) return std::nullopt;
    const std::vector<Point> in = distinct(inner.support);
    const std::vector<Point> out = distinct(outer.support);
    const std::size_t n = inner.n();

    // t = K·Σp - ω₀ at m = K·|P| always fits for K large enough.
    Point total = zero_point(n);
    for (const Point& p : out) total = add(total, p);
    MonomialFit fallback;
    for (long k = 1; k <= (1L << 20); k *= 2) {
        Point t = sub(scale(Rational(k), total), in.front());
        const long m = k * static_cast<long>(out.size());
        if (nonnegative_integral(t) && translate_fits(inner, outer, t, m)) {
            fallback = MonomialFit{m, std::move(t)};
            break;
        }
    }
    if (fallback.m == 0) return std::nullopt;

    const long start = *fits_eventually(inner, outer);
    const long stop = std::min(fallback.m, start + 256);
    for (long m = start; m < stop; ++m) {
        if (std::optional<Point> t = integral_translate_at(in, out, inner, outer, m)) return MonomialFit{m, *t};
    }
    return fallback;
}

}  // namespace tropnull::newton
