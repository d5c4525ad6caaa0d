#include "tropnull/certify.hpp"

#include "tropnull/error.hpp"
#include "tropnull/newton.hpp"
#include "tropnull/regions.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace tropnull {

const char* to_string(VerifyStatus s) { return s == VerifyStatus::Pass ? "PASS" : "FAIL"; }

namespace {

void require_member(const Verdict& v) {
    if (!v.member) throw Error(ErrorKind::NotAMember, "no certificate exists for a non-member");
}

bool poly_cofactors(IdealFlavor f) { return cofactor_flavor(f) == Flavor::Poly; }

Point min_exponents(const TropFunction& f) {
    Point lo = f.terms().front().exponent;
    for (const Term& t : f.terms()) {
        for (std::size_t j = 0; j < lo.size(); ++j) {
            if (t.exponent[j] < lo[j]) lo[j] = t.exponent[j];
        }
    }
    return lo;
}

bool integral_exponents(const TropFunction& f) {
    for (const Term& t : f.terms()) {
        for (const Rational& e : t.exponent) {
            if (!is_integer(e)) return false;
        }
    }
    return true;
}

// One affine piece per region; pieces with the same exponent keep the larger
// value (ν wins a tie), so a cofactor never carries duplicate terms.
TropFunction collect(std::size_t n, Flavor flavor, Semiring semiring, const std::vector<Term>& pieces) {
    std::map<Point, ExtScalar> best;
    for (const Term& t : pieces) {
        auto [it, inserted] = best.try_emplace(t.exponent, t.coefficient);
        if (inserted) continue;
        if (t.coefficient.value > it->second.value) it->second = t.coefficient;
        else if (t.coefficient.value == it->second.value && t.coefficient.is_nu()) it->second.tag = Tag::Nu;
    }
    std::vector<Term> terms;
    for (auto& [e, c] : best) terms.push_back(Term{e, c});
    return TropFunction(n, flavor, semiring, std::move(terms));
}

std::vector<std::size_t> unused_generators(const Verdict& v, std::size_t k) {
    std::vector<bool> used(k, false);
    for (const Assignment& a : v.assignments) used[a.generator] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i) {
        if (!used[i]) out.push_back(i);
    }
    return out;
}

// Cofactors from the assignment, in the coordinates of (f, gens) as given.
// `shift_f` and `shift_g` move region and generator gradients into those
// coordinates (both zero when no shift is in play).
Certificate build(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& v, long m,
                  const Point& shift_f, const std::vector<Point>& shift_g, Flavor flavor) {
    const Rational mq(m);
    std::map<std::size_t, std::vector<Term>> pieces;
    for (const Assignment& a : v.assignments) {
        const Region& d = v.regions.regions[a.region];
        const Point wd = add(d.exponent, shift_f);
        const Point wi = add(a.generator_term.exponent, shift_g[a.generator]);
        Tag tag = Tag::Real;
        if (v.flavor == IdealFlavor::Extended && d.coefficient.is_nu() && !a.generator_term.coefficient.is_nu()) {
            tag = Tag::Nu;
        }
        pieces[a.generator].push_back(
            Term{sub(scale(mq, wd), wi), ExtScalar{mq * d.coefficient.value - a.generator_term.coefficient.value, tag}});
    }
    Certificate cert;
    cert.m = m;
    cert.flavor = v.flavor;
    for (auto& [i, ps] : pieces) {
        cert.J.push_back(i);
        cert.cofactors.push_back(collect(f.n(), flavor, f.semiring(), ps));
    }
    (void)gens;
    return cert;
}

Point first_exponent(const TropFunction& f) { return canonicalize(f).terms().front().exponent; }

// Restricted flavor: generators outside J get a monomial x^t + c with
// t + Δ(F_i) ⊆ m·Δ(F) and c the largest constant keeping mF on top.
void pad_restricted(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& v,
                    Certificate& cert) {
    const newton::NewtonPolytope outer = newton::newton_polytope(f);
    const TropFunction mf = trop_pow(f, cert.m);
    const Point p0 = first_exponent(f);
    for (std::size_t i : unused_generators(v, gens.size())) {
        std::optional<newton::MonomialFit> fit = newton::min_monomial_fit(newton::newton_polytope(gens[i]), outer);
        if (!fit || fit->m > cert.m) {
            throw Error(ErrorKind::InvariantViolation,
                        "no monomial padding for generator " + std::to_string(i + 1) + " at m = " + std::to_string(cert.m));
        }
        // A translate at m_fit moves to any larger m along a vertex of Δ(F).
        const Point t = add(fit->translate, scale(Rational(cert.m - fit->m), p0));
        std::optional<Rational> c = shift_constant(mf, shift_exponents(gens[i], t, Flavor::Poly));
        if (!c) throw Error(ErrorKind::InvariantViolation, "padding translate leaves m·Δ(F)");
        TropFunction h(f.n(), Flavor::Poly, Semiring::R, {term(t, *c)});
        auto pos = std::lower_bound(cert.J.begin(), cert.J.end(), i);
        const auto at = pos - cert.J.begin();
        cert.J.insert(pos, i);
        cert.cofactors.insert(cert.cofactors.begin() + at, std::move(h));
    }
}

class Sampler {
public:
    Sampler(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {}

    Point next(long radius) {
        Point p(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            const long den = 1 + static_cast<long>(rng_() % 12);
            const long span = 2 * radius * den + 1;
            const long num = static_cast<long>(rng_() % static_cast<std::uint64_t>(span)) - radius * den;
            p[j] = Rational(num, den);
            p[j].canonicalize();
        }
        return p;
    }

private:
    std::size_t n_;
    std::mt19937_64 rng_;
};

struct Comparison {
    const TropFunction& lhs;
    const TropFunction& rhs;
    bool tags;
    VerificationReport& report;

    // False (and the report filled in) at the first disagreement.
    bool at(const Point& x) {
        ExtScalar l = eval(lhs, x);
        ExtScalar r = eval(rhs, x);
        const bool same = tags ? l == r : l.value == r.value;
        if (same) return true;
        report.first_discrepancy = Discrepancy{x, std::move(l), std::move(r)};
        return false;
    }
};

// x with term a = term b strictly above every other term, or with three
// terms tied when `c` is given.
std::optional<Point> stratum_point(const TropFunction& g, std::size_t a, std::size_t b, std::optional<std::size_t> c) {
    lp::Polyhedron p(g.n());
    const Term& ta = g.terms()[a];
    auto tie = [&](const Term& tb) {
        p.add_equal(sub(ta.exponent, tb.exponent), tb.coefficient.value - ta.coefficient.value);
    };
    tie(g.terms()[b]);
    if (c) tie(g.terms()[*c]);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (s == a || s == b || (c && s == *c)) continue;
        const Term& ts = g.terms()[s];
        p.add_greater(sub(ta.exponent, ts.exponent), ts.coefficient.value - ta.coefficient.value);
    }
    return lp::strict_interior(p);
}

bool check_tags(const TropFunction& lhs, const TropFunction& rhs, VerificationReport& report) {
    Comparison cmp{lhs, rhs, true, report};
    const RegionDecomposition dl = decompose(lhs);
    const RegionDecomposition dr = decompose(rhs);
    for (const Region& a : dl.regions) {
        for (const Region& b : dr.regions) {
            lp::Polyhedron cell = a.poly;
            cell.append(b.poly);
            std::optional<Point> x = lp::strict_interior(cell);
            if (!x) continue;
            ++report.cells_checked;
            if (!cmp.at(*x)) return false;
        }
    }
    const TropFunction& g = dl.function;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (std::optional<Point> x = stratum_point(g, a, b, std::nullopt)) {
                ++report.cells_checked;
                if (!cmp.at(*x)) return false;
            }
            if (g.n() != 2) continue;
            for (std::size_t c = b + 1; c < g.size(); ++c) {
                if (std::optional<Point> x = stratum_point(g, a, b, c)) {
                    ++report.cells_checked;
                    if (!cmp.at(*x)) return false;
                }
            }
        }
    }
    return true;
}

VerificationReport fail(VerificationReport r, std::string message) {
    r.status = VerifyStatus::Fail;
    r.message = std::move(message);
    return r;
}

}  // namespace

long explicit_m_bound(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& verdict) {
    require_member(verdict);
    long m1 = 1;
    long m2 = 1;
    for (const Assignment& a : verdict.assignments) {
        const Point& wd = verdict.regions.regions[a.region].exponent;
        const Point& wi = a.generator_term.exponent;
        if (poly_cofactors(verdict.flavor)) {
            for (std::size_t j = 0; j < wd.size(); ++j) {
                if (sgn(wi[j]) <= 0 || sgn(wd[j]) <= 0) continue;
                Rational q = wi[j] / wd[j];
                m1 = std::max(m1, ceil_to_long(q));
            }
        }
        const TropFunction g = canonicalize(gens[a.generator]);
        for (const Term& t : g.terms()) {
            for (std::size_t j = 0; j < wi.size(); ++j) {
                Rational d = abs(t.exponent[j] - wi[j]);
                m2 = std::max(m2, 1 + ceil_to_long(d));
            }
        }
    }
    long bound = std::max(m1, m2);
    if (verdict.flavor == IdealFlavor::Restricted) {
        const newton::NewtonPolytope outer = newton::newton_polytope(f);
        for (std::size_t i : unused_generators(verdict, gens.size())) {
            std::optional<newton::MonomialFit> fit = newton::min_monomial_fit(newton::newton_polytope(gens[i]), outer);
            if (!fit) throw Error(ErrorKind::NotAMember, "generator " + std::to_string(i + 1) + " admits no monomial fit");
            bound = std::max(bound, fit->m);
        }
    }
    return bound;
}

Certificate construct_at(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& verdict, long m) {
    require_member(verdict);
    if (m < 1) throw Error(ErrorKind::NonPositivePower, "power must be positive");
    const Flavor flavor = cofactor_flavor(verdict.flavor);
    if (verdict.flavor == IdealFlavor::Laurent || verdict.flavor == IdealFlavor::Pl) {
        const LaurentShift s = laurent_shift(f, gens);
        const Certificate shifted = build(s.f, s.gens, verdict, m, s.a, s.b,
                                          integral_exponents(s.f) ? Flavor::Laurent : Flavor::Plq);
        return unshift(s, shifted, verdict.flavor);
    }
    Certificate cert = build(f, gens, verdict, m, zero_point(f.n()), std::vector<Point>(gens.size(), zero_point(f.n())),
                             flavor);
    if (verdict.flavor == IdealFlavor::Restricted) pad_restricted(f, gens, verdict, cert);
    return cert;
}

SynthesisResult synthesize_detailed(const TropFunction& f, const std::vector<TropFunction>& gens,
                                    const Verdict& verdict, int max_escalations, const VerifyOptions& options) {
    require_member(verdict);
    SynthesisResult out;
    out.bound = explicit_m_bound(f, gens, verdict);
    long m = out.bound;
    for (int e = 0; e <= max_escalations; ++e, m *= 2) {
        Certificate cert = construct_at(f, gens, verdict, m);
        VerificationReport report = verify(f, gens, cert, options);
        if (report.passed()) {
            out.certificate = std::move(cert);
            out.escalations = e;
            out.report = std::move(report);
            return out;
        }
    }
    throw Error(ErrorKind::EscalationExhausted,
                "no verified certificate up to m = " + std::to_string(m / 2) + " after " +
                    std::to_string(max_escalations) + " doublings");
}

Certificate synthesize(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& verdict,
                       int max_escalations) {
    return synthesize_detailed(f, gens, verdict, max_escalations).certificate;
}

VerificationReport verify(const TropFunction& f, const std::vector<TropFunction>& gens, const Certificate& cert,
                          const VerifyOptions& options) {
    VerificationReport report;
    if (cert.m < 1) return fail(report, "m must be a positive integer");
    if (cert.J.empty()) return fail(report, "J is empty");
    if (cert.J.size() != cert.cofactors.size()) return fail(report, "J and cofactors differ in length");
    for (std::size_t k = 0; k < cert.J.size(); ++k) {
        if (cert.J[k] >= gens.size()) return fail(report, "J names generator " + std::to_string(cert.J[k] + 1));
        if (k > 0 && cert.J[k] <= cert.J[k - 1]) return fail(report, "J must be strictly increasing");
        const TropFunction& h = cert.cofactors[k];
        if (h.n() != f.n() || h.semiring() != gens[cert.J[k]].semiring()) {
            return fail(report, "cofactor " + std::to_string(k + 1) + " does not match its generator");
        }
        if (static_cast<int>(h.flavor()) > static_cast<int>(cofactor_flavor(cert.flavor))) {
            return fail(report, "cofactor for generator " + std::to_string(cert.J[k] + 1) + " has flavor " +
                                    to_string(h.flavor()) + ", not allowed under " + to_string(cert.flavor));
        }
    }
    if (cert.flavor == IdealFlavor::Restricted && cert.J.size() != gens.size()) {
        return fail(report, "the restricted flavor needs a cofactor for every generator");
    }
    for (const TropFunction& g : gens) {
        if (g.n() != f.n() || g.semiring() != f.semiring()) return fail(report, "instance functions do not match");
    }

    const TropFunction lhs = trop_pow(canonicalize(f), cert.m);
    std::optional<TropFunction> sum;
    for (std::size_t k = 0; k < cert.J.size(); ++k) {
        TropFunction p = trop_mul(cert.cofactors[k], gens[cert.J[k]]);
        sum = sum ? trop_add(*sum, p) : canonicalize(p);
    }
    const TropFunction& rhs = *sum;
    const bool tags = f.semiring() == Semiring::T;

    const TropFunction pl = project(lhs);
    const TropFunction pr = project(rhs);
    std::optional<Point> bad = excess_point(pl, pr);
    if (!bad) bad = excess_point(pr, pl);
    if (bad) {
        report.first_discrepancy = Discrepancy{*bad, eval(lhs, *bad), eval(rhs, *bad)};
        return fail(report, "F^m and the certificate differ as functions");
    }
    report.symbolic_equal = true;

    if (tags && !check_tags(lhs, rhs, report)) return fail(report, "tags differ on a refinement cell or stratum");

    Comparison cmp{lhs, rhs, tags, report};
    Sampler sampler(f.n(), options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const Point x = sampler.next(s % 2 == 0 ? 25 : 250);
        ++report.sampled_points_checked;
        if (!cmp.at(x)) return fail(report, "sampled evaluation disagrees");
    }
    report.status = VerifyStatus::Pass;
    return report;
}

LaurentShift laurent_shift(const TropFunction& f, const std::vector<TropFunction>& gens) {
    auto require_r = [](const TropFunction& g) {
        if (g.semiring() != Semiring::R) throw Error(ErrorKind::FlavorMismatch, "the monomial shift works over R");
    };
    require_r(f);
    const std::size_t n = f.n();
    Point a = min_exponents(f);
    for (Rational& v : a) {
        v = 1 - v;
        if (sgn(v) < 0) v = 0;
        if (!is_integer(v)) v = Rational(ceil_to_long(v));
    }
    auto shifted_flavor = [](const TropFunction& g) { return integral_exponents(g) ? Flavor::Poly : Flavor::Plq; };
    TropFunction fs = shift_exponents(f, a, Flavor::Plq);
    fs = with_flavor(fs, shifted_flavor(fs));
    LaurentShift out{fs, {}, a, {}};
    for (const TropFunction& g : gens) {
        require_r(g);
        if (g.n() != n) throw Error(ErrorKind::DimensionMismatch, "generator has a different variable count");
        Point b = min_exponents(g);
        for (Rational& v : b) {
            v = -v;
            if (sgn(v) < 0) v = 0;
            if (!is_integer(v)) v = Rational(ceil_to_long(v));
        }
        TropFunction gs = shift_exponents(g, b, Flavor::Plq);
        out.gens.push_back(with_flavor(gs, shifted_flavor(gs)));
        out.b.push_back(std::move(b));
    }
    return out;
}

Certificate unshift(const LaurentShift& shift, const Certificate& shifted, IdealFlavor flavor) {
    Certificate out;
    out.m = shifted.m;
    out.flavor = flavor;
    out.J = shifted.J;
    const Point ma = scale(Rational(shifted.m), shift.a);
    for (std::size_t k = 0; k < shifted.J.size(); ++k) {
        TropFunction h = shift_exponents(shifted.cofactors[k], sub(shift.b.at(shifted.J[k]), ma), Flavor::Plq);
        const Flavor target = flavor == IdealFlavor::Pl ? Flavor::Plq
                              : integral_exponents(h) ? Flavor::Laurent
                                                      : Flavor::Plq;
        out.cofactors.push_back(with_flavor(h, target));
    }
    return out;
}

}  // namespace tropnull
