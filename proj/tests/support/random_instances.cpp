#include "random_instances.hpp"

#include <algorithm>
#include <set>

namespace tropnull::testing {

long InstanceGenerator::uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool InstanceGenerator::chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

Rational InstanceGenerator::coefficient(const FunctionShape& s) {
    const long den = uniform(1, s.max_den);
    Rational q(uniform(-s.coef_range * den, s.coef_range * den), den);
    q.canonicalize();
    return q;
}

Point InstanceGenerator::exponent(const FunctionShape& s, long lo, long hi) {
    Point e(s.n);
    for (Rational& v : e) v = uniform(lo, hi);
    return e;
}

TropFunction InstanceGenerator::function(const FunctionShape& s, std::size_t terms, long lo, long hi) {
    std::set<Point> seen;
    std::vector<Term> ts;
    for (std::size_t k = 0; k < 4 * terms && ts.size() < terms; ++k) {
        Point e = exponent(s, lo, hi);
        if (!seen.insert(e).second) continue;
        Tag tag = s.semiring == Semiring::T && chance(s.nu_probability) ? Tag::Nu : Tag::Real;
        ts.push_back(term(std::move(e), coefficient(s), tag));
    }
    return make_function(s.n, s.flavor, s.semiring, std::move(ts));
}

TropFunction InstanceGenerator::function(const FunctionShape& s) {
    const auto terms = static_cast<std::size_t>(uniform(1, static_cast<long>(s.max_terms)));
    return function(s, terms, s.min_exp, s.max_exp);
}

TropFunction InstanceGenerator::monomial(const FunctionShape& s) { return function(s, 1, s.min_exp, s.max_exp); }

RandomInstance InstanceGenerator::instance(const FunctionShape& s, std::size_t max_k) {
    const auto k = static_cast<std::size_t>(uniform(1, static_cast<long>(max_k)));
    const long kind = uniform(0, 4);
    std::vector<TropFunction> gens;
    auto fill = [&](std::size_t upto) {
        while (gens.size() < upto) gens.push_back(chance(0.25) ? monomial(s) : function(s));
    };
    auto place = [&](TropFunction g) {
        const auto pos = static_cast<std::size_t>(uniform(0, static_cast<long>(gens.size())));
        gens.insert(gens.begin() + static_cast<long>(pos), std::move(g));
    };
    switch (kind) {
    case 1: {
        TropFunction f = function(s);
        fill(k - 1);
        place(f);
        return {f, gens, "F-in-gens"};
    }
    case 2: {
        // Both factors keep exponents in range after multiplication.
        const long lo = s.min_exp / 2, hi = s.max_exp / 2;
        const long lo2 = s.min_exp - lo, hi2 = s.max_exp - hi;
        const std::size_t t = std::min<std::size_t>(2, s.max_terms);
        TropFunction a = function(s, static_cast<std::size_t>(uniform(1, static_cast<long>(t))), lo, hi);
        TropFunction b = function(s, static_cast<std::size_t>(uniform(1, static_cast<long>(t))), lo2, hi2);
        fill(k - 1);
        place(a);
        return {trop_mul(a, b), gens, "product"};
    }
    case 3: {
        TropFunction f = function(s);
        fill(k - 1);
        place(monomial(s));
        return {f, gens, "monomial"};
    }
    case 4: {
        // A generator x^t F with F's exponents kept within range.
        const long span = std::max(0L, (s.max_exp - s.min_exp) / 2);
        TropFunction f = function(s, static_cast<std::size_t>(uniform(1, static_cast<long>(s.max_terms))), s.min_exp,
                                  s.min_exp + span);
        Point t = exponent(s, 0, s.max_exp - s.min_exp - span);
        fill(k - 1);
        place(shift_exponents(f, t, s.flavor));
        return {f, gens, "shifted"};
    }
    default:
        fill(k);
        return {function(s), gens, "random"};
    }
}

}  // namespace tropnull::testing
