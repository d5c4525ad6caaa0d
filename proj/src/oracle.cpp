#include "tropnull/oracle.hpp"

#include "tropnull/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace tropnull::oracle {

namespace {

struct Merged {
    std::vector<Point> exponents;
    std::vector<ExtScalar> coefficients;
};

// Equal exponents collapse to the larger coefficient; a tie is ν over T.
Merged merge(const TropFunction& f) {
    std::map<Point, ExtScalar> m;
    for (const Term& t : f.terms()) {
        auto [it, fresh] = m.try_emplace(t.exponent, t.coefficient);
        if (fresh) continue;
        ExtScalar& c = it->second;
        if (t.coefficient.value > c.value) c = t.coefficient;
        else if (t.coefficient.value == c.value && f.semiring() == Semiring::T) c.tag = Tag::Nu;
    }
    Merged out;
    for (auto& [e, c] : m) {
        out.exponents.push_back(e);
        out.coefficients.push_back(c);
    }
    return out;
}

ExtScalar evaluate(const TropFunction& f, const Point& x) {
    std::optional<ExtScalar> best;
    int hits = 0;
    for (const Term& t : f.terms()) {
        Rational v = t.coefficient.value;
        for (std::size_t j = 0; j < x.size(); ++j) v += t.exponent[j] * x[j];
        if (!best || v > best->value) {
            best = ExtScalar{v, t.coefficient.tag};
            hits = 1;
        } else if (v == best->value) {
            ++hits;
            if (t.coefficient.is_nu()) best->tag = Tag::Nu;
        }
    }
    if (f.semiring() == Semiring::R) best->tag = Tag::Real;
    else if (hits > 1) best->tag = Tag::Nu;
    return *best;
}

mpz_class lcm_of_denominators(const std::vector<const TropFunction*>& fs, bool exponents) {
    mpz_class l = 1;
    for (const TropFunction* f : fs) {
        for (const Term& t : f->terms()) {
            if (exponents) {
                for (const Rational& e : t.exponent) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
            } else {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.value.get_den_mpz_t());
            }
        }
    }
    return l;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Error(ErrorKind::InvariantViolation, "grid evaluation overflows 64 bits");
    return z.get_si();
}

// Integer images of a merged function: value·S = Σ W_j X_j + C at x = X / D.
struct Scaled {
    std::vector<std::vector<long>> w;
    std::vector<long> c;
    std::vector<Tag> tags;
    std::vector<Point> exponents;
};

Scaled scale_function(const Merged& m, const mpz_class& le, const mpz_class& lc, const mpz_class& d) {
    Scaled s;
    for (std::size_t t = 0; t < m.exponents.size(); ++t) {
        std::vector<long> w;
        for (const Rational& e : m.exponents[t]) {
            mpz_class v = e.get_num() * (le / e.get_den()) * lc;
            w.push_back(to_long(v));
        }
        const Rational& c = m.coefficients[t].value;
        mpz_class cv = c.get_num() * (lc / c.get_den()) * d * le;
        s.w.push_back(std::move(w));
        s.c.push_back(to_long(cv));
        s.tags.push_back(m.coefficients[t].tag);
        s.exponents.push_back(m.exponents[t]);
    }
    return s;
}

// Index of the unique maximizing term, or -1 on a tie.
int argmax(const Scaled& s, const long* x, std::size_t n) {
    int best = -1;
    __int128 top = 0;
    bool tie = false;
    for (std::size_t t = 0; t < s.c.size(); ++t) {
        __int128 v = s.c[t];
        for (std::size_t j = 0; j < n; ++j) v += static_cast<__int128>(s.w[t][j]) * x[j];
        if (best < 0 || v > top) {
            best = static_cast<int>(t);
            top = v;
            tie = false;
        } else if (v == top) {
            tie = true;
        }
    }
    return tie ? -1 : best;
}

// All points where two terms of a function tie, plus a point on each tie locus.
void collect_tie_extent(const TropFunction& f, std::vector<Rational>& extent) {
    const auto& ts = f.terms();
    const std::size_t n = f.n();
    struct Line {
        Point a;
        Rational b;
    };
    std::vector<Line> lines;
    for (std::size_t s = 0; s < ts.size(); ++s) {
        for (std::size_t t = s + 1; t < ts.size(); ++t) {
            Point a = sub(ts[s].exponent, ts[t].exponent);
            if (std::all_of(a.begin(), a.end(), [](const Rational& v) { return sgn(v) == 0; })) continue;
            lines.push_back(Line{std::move(a), ts[t].coefficient.value - ts[s].coefficient.value});
        }
    }
    for (const Line& l : lines) {
        // Closest point of {⟨a,x⟩ = b} to the origin.
        Rational norm = dot(l.a, l.a);
        for (const Rational& v : scale(l.b / norm, l.a)) extent.push_back(abs(v));
    }
    if (n != 2) return;
    for (std::size_t p = 0; p < lines.size(); ++p) {
        for (std::size_t q = p + 1; q < lines.size(); ++q) {
            const Line& u = lines[p];
            const Line& v = lines[q];
            Rational det = u.a[0] * v.a[1] - u.a[1] * v.a[0];
            if (sgn(det) == 0) continue;
            Rational x = (u.b * v.a[1] - v.b * u.a[1]) / det;
            Rational y = (u.a[0] * v.b - v.a[0] * u.b) / det;
            extent.push_back(abs(x));
            extent.push_back(abs(y));
        }
    }
}

TropFunction as_function(const TropFunction& f, const Merged& m) {
    std::vector<Term> terms;
    for (std::size_t t = 0; t < m.exponents.size(); ++t) terms.push_back(Term{m.exponents[t], m.coefficients[t]});
    return TropFunction(f.n(), f.flavor(), f.semiring(), std::move(terms));
}

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point& q, const Point& a, const Point& b) {
    if (sgn(cross(a, b, q)) != 0) return false;
    for (std::size_t j = 0; j < 2; ++j) {
        if (q[j] < std::min(a[j], b[j]) || q[j] > std::max(a[j], b[j])) return false;
    }
    return true;
}

bool in_triangle(const Point& q, const Point& a, const Point& b, const Point& c) {
    if (sgn(cross(a, b, c)) == 0) return on_segment(q, a, b) || on_segment(q, b, c) || on_segment(q, a, c);
    const int s1 = sgn(cross(a, b, q));
    const int s2 = sgn(cross(b, c, q));
    const int s3 = sgn(cross(c, a, q));
    const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(has_neg && has_pos);
}

bool in_hull(const Point& q, const std::vector<Point>& pts) {
    if (q.size() == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
        return (*lo)[0] <= q[0] && q[0] <= (*hi)[0];
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
            for (std::size_t k = j; k < pts.size(); ++k) {
                if (in_triangle(q, pts[i], pts[j], pts[k])) return true;
            }
        }
    }
    return false;
}

}  // namespace

SampleSet make_samples(std::size_t n, std::size_t count, std::uint64_t seed, const Rational& radius) {
    SampleSet s;
    s.seed = seed;
    s.radius = radius;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        Point p(n);
        for (std::size_t j = 0; j < n; ++j) {
            const long den = 1 + static_cast<long>(rng() % 10000);
            // Uniform over the multiples of 1/den inside the box.
            mpz_class reach = radius.get_num() * den / radius.get_den();
            const long r = to_long(reach);
            const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * r + 1)) - r;
            p[j] = Rational(num, den);
            p[j].canonicalize();
        }
        s.points.push_back(std::move(p));
    }
    return s;
}

std::optional<SampleDiscrepancy> eval_equal_sampled(const TropFunction& f, const TropFunction& g,
                                                    const SampleSet& samples) {
    if (f.n() != g.n()) throw Error(ErrorKind::DimensionMismatch, "functions in different variable counts");
    if (f.semiring() != g.semiring()) throw Error(ErrorKind::SemiringMismatch, "functions over different semirings");
    for (const Point& x : samples.points) {
        if (x.size() != f.n()) throw Error(ErrorKind::DimensionMismatch, "sample of wrong dimension");
        ExtScalar a = evaluate(f, x);
        ExtScalar b = evaluate(g, x);
        if (!(a == b)) return SampleDiscrepancy{x, std::move(a), std::move(b)};
    }
    return std::nullopt;
}

long sampling_radius(const TropFunction& f, const std::vector<TropFunction>& gens, long min_radius) {
    std::vector<Rational> extent;
    collect_tie_extent(f, extent);
    for (const TropFunction& g : gens) collect_tie_extent(g, extent);
    // Tie loci of F against each generator's pieces shape the clusters too.
    for (const TropFunction& g : gens) {
        std::vector<Term> both = f.terms();
        both.insert(both.end(), g.terms().begin(), g.terms().end());
        for (Term& t : both) t.coefficient.tag = Tag::Real;
        collect_tie_extent(TropFunction(f.n(), Flavor::Plq, Semiring::R, std::move(both)), extent);
    }
    long r = min_radius;
    for (const Rational& e : extent) r = std::max(r, ceil_to_long(e) + 2);
    return r;
}

bool monomial_fit_bruteforce(const std::vector<Point>& inner, const std::vector<Point>& outer, int max_m) {
    if (inner.empty() || outer.empty()) throw Error(ErrorKind::EmptyInput, "empty support");
    const std::size_t n = inner.front().size();
    if (n > 2) throw Error(ErrorKind::DimensionTooHigh, "brute-force fits need n <= 2");
    for (int m = 1; m <= max_m; ++m) {
        std::vector<Point> dil;
        for (const Point& p : outer) dil.push_back(scale(Rational(m), p));
        std::vector<long> hi(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational top = dil.front()[j];
            Rational low = inner.front()[j];
            for (const Point& p : dil) top = std::max(top, p[j]);
            for (const Point& w : inner) low = std::min(low, w[j]);
            Rational span = top - low;
            hi[j] = floor_to_long(span);
        }
        if (std::any_of(hi.begin(), hi.end(), [](long h) { return h < 0; })) continue;
        std::vector<long> t(n, 0);
        for (;;) {
            Point tp(n);
            for (std::size_t j = 0; j < n; ++j) tp[j] = t[j];
            bool fits = true;
            for (const Point& w : inner) {
                if (!in_hull(add(tp, w), dil)) {
                    fits = false;
                    break;
                }
            }
            if (fits) return true;
            std::size_t j = 0;
            while (j < n && t[j] == hi[j]) t[j] = 0, ++j;
            if (j == n) break;
            ++t[j];
        }
    }
    return false;
}

Verdict criterion_by_sampling(const TropFunction& f, const std::vector<TropFunction>& gens, IdealFlavor flavor,
                              const GridOptions& options) {
    const std::size_t n = f.n();
    if (n > 2) throw Error(ErrorKind::DimensionTooHigh, "grid sampling supports n <= 2");
    if (gens.empty()) throw Error(ErrorKind::EmptyInput, "an ideal needs at least one generator");
    for (const TropFunction& g : gens) {
        if (g.n() != n) throw Error(ErrorKind::DimensionMismatch, "generator has a different variable count");
    }

    const Merged mf = merge(f);
    std::vector<Merged> mg;
    for (const TropFunction& g : gens) mg.push_back(merge(g));

    // Grid x_j = i·step + offset_j with offsets 1/7 and 1/11.
    const Rational offsets[2] = {Rational(1, 7), Rational(1, 11)};
    mpz_class d = options.step.get_den();
    for (const Rational& o : offsets) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), o.get_den_mpz_t());
    std::vector<const TropFunction*> all{&f};
    for (const TropFunction& g : gens) all.push_back(&g);
    const mpz_class le = lcm_of_denominators(all, true);
    const mpz_class lc = lcm_of_denominators(all, false);

    const long radius = sampling_radius(f, gens, options.min_radius);
    Rational steps_q = Rational(radius) / options.step;
    const long half = ceil_to_long(steps_q);
    const long side = 2 * half + 1;
    Rational step_scaled_q = options.step * Rational(d);
    const long step_scaled = to_long(step_scaled_q.get_num());
    long off[2];
    for (int j = 0; j < 2; ++j) {
        Rational o = offsets[j] * Rational(d);
        off[j] = to_long(o.get_num());
    }

    const Scaled sf = scale_function(mf, le, lc, d);
    std::vector<Scaled> sg;
    for (const Merged& m : mg) sg.push_back(scale_function(m, le, lc, d));

    const std::size_t count = n == 1 ? side : static_cast<std::size_t>(side) * side;
    std::vector<int> fa(count);
    std::vector<std::vector<int>> ga(gens.size(), std::vector<int>(count));
    auto coords = [&](std::size_t idx, long* x) {
        const long i = static_cast<long>(idx % side) - half;
        x[0] = i * step_scaled + off[0];
        if (n == 2) {
            const long k = static_cast<long>(idx / side) - half;
            x[1] = k * step_scaled + off[1];
        }
    };
    for (std::size_t idx = 0; idx < count; ++idx) {
        long x[2];
        coords(idx, x);
        fa[idx] = argmax(sf, x, n);
        for (std::size_t g = 0; g < gens.size(); ++g) ga[g][idx] = argmax(sg[g], x, n);
    }

    // Clusters: 4-connected runs of grid points sharing F's argmax.
    std::vector<int> label(count, -1);
    std::vector<std::size_t> seeds;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < count; ++s) {
        if (fa[s] < 0 || label[s] >= 0) continue;
        const int id = static_cast<int>(seeds.size());
        seeds.push_back(s);
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            const long i = static_cast<long>(u % side);
            const long k = static_cast<long>(u / side);
            const long nbr[4][2] = {{i - 1, k}, {i + 1, k}, {i, k - 1}, {i, k + 1}};
            for (const auto& q : nbr) {
                if (q[0] < 0 || q[0] >= side || q[1] < 0 || (n == 1 ? q[1] != 0 : q[1] >= side)) continue;
                const std::size_t v = static_cast<std::size_t>(q[1] * side + q[0]);
                if (label[v] >= 0 || fa[v] != fa[s]) continue;
                label[v] = id;
                stack.push_back(v);
            }
        }
    }

    // Per cluster and generator: the constant argmax, or -1 when it varies.
    const std::size_t clusters = seeds.size();
    std::vector<std::vector<int>> cg(clusters, std::vector<int>(gens.size(), -2));
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (label[idx] < 0) continue;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int& c = cg[label[idx]][g];
            const int a = ga[g][idx];
            if (c == -2) c = a;
            else if (c != a) c = -1;
        }
    }

    const bool gradient = flavor == IdealFlavor::Standard || flavor == IdealFlavor::Restricted ||
                          flavor == IdealFlavor::Extended;
    Verdict v{false, flavor, RegionDecomposition{as_function(f, mf), {}}, {}, {}};
    for (std::size_t r = 0; r < clusters; ++r) {
        const int term = fa[seeds[r]];
        long x[2];
        coords(seeds[r], x);
        Point at(n);
        for (std::size_t j = 0; j < n; ++j) at[j] = Rational(mpz_class(x[j]), d), at[j].canonicalize();
        v.regions.regions.push_back(Region{static_cast<std::size_t>(term), mf.exponents[term], mf.coefficients[term],
                                           lp::Polyhedron(n), at});
        const Point& wd = mf.exponents[term];
        const bool real_region = !mf.coefficients[term].is_nu();
        FailureReason reason = FailureReason::NoLinearGenerator;
        bool done = false;
        for (std::size_t g = 0; g < gens.size() && !done; ++g) {
            const int gt = cg[r][g];
            if (gt < 0) continue;
            const Point& wi = mg[g].exponents[gt];
            bool e1 = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(wi[j]) > 0 && sgn(wd[j]) <= 0) e1 = false;
            }
            if (gradient && !e1) {
                reason = std::max(reason, FailureReason::GradientConditionFailed);
                continue;
            }
            if (flavor == IdealFlavor::Extended && real_region && mg[g].coefficients[gt].is_nu()) {
                reason = std::max(reason, FailureReason::TagClassMismatch);
                continue;
            }
            Assignment a{r, g, DominantTerm{static_cast<std::size_t>(gt), wi, mg[g].coefficients[gt]}, e1,
                         std::nullopt};
            if (flavor == IdealFlavor::Extended) a.tag_class = real_region ? TagClass::Pi : TagClass::PiNu;
            v.assignments.push_back(std::move(a));
            done = true;
        }
        if (!done) v.failures.push_back(Failure{r, reason, std::nullopt});
    }
    if (flavor == IdealFlavor::Restricted) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (!monomial_fit_bruteforce(mg[g].exponents, mf.exponents, options.max_restricted_m)) {
                v.failures.push_back(Failure{std::nullopt, FailureReason::DilationFitFailed, g});
            }
        }
    }
    v.member = v.failures.empty();
    return v;
}

}  // namespace tropnull::oracle
