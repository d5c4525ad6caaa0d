#include "tropnull/core.hpp"

#include "tropnull/error.hpp"

#include <algorithm>
#include <map>

namespace tropnull {

const char* to_string(Tag tag) { return tag == Tag::Real ? "real" : "nu"; }
const char* to_string(Semiring s) { return s == Semiring::R ? "R" : "T"; }

const char* to_string(Flavor f) {
    switch (f) {
    case Flavor::Poly: return "poly";
    case Flavor::Laurent: return "laurent";
    case Flavor::Plq: return "pl";
    }
    return "?";
}

Flavor weakest(Flavor a, Flavor b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

ExtScalar semiring_add(const ExtScalar& a, const ExtScalar& b, Semiring s) {
    if (s == Semiring::R) return {a.value < b.value ? b.value : a.value, Tag::Real};
    if (a.value > b.value) return a;
    if (b.value > a.value) return b;
    return {a.value, Tag::Nu};
}

ExtScalar semiring_mul(const ExtScalar& a, const ExtScalar& b, Semiring s) {
    Rational v = a.value + b.value;
    if (s == Semiring::R) return {v, Tag::Real};
    return {v, (a.is_nu() || b.is_nu()) ? Tag::Nu : Tag::Real};
}

std::string to_string(const ExtScalar& a) { return to_string(a.value) + (a.is_nu() ? "v" : ""); }

Rational Term::value_at(const Point& x) const { return dot(x, exponent) + coefficient.value; }

Term term(Point exponent, Rational coefficient, Tag tag) {
    return Term{std::move(exponent), ExtScalar{std::move(coefficient), tag}};
}

namespace {

void validate(std::size_t n, Flavor flavor, Semiring semiring, const std::vector<Term>& terms) {
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "variable count must be at least 1");
    if (terms.empty()) throw Error(ErrorKind::EmptySupport, "a tropical function needs at least one term");
    for (const Term& t : terms) {
        if (t.exponent.size() != n) {
            throw Error(ErrorKind::DimensionMismatch,
                        "exponent " + to_string(t.exponent) + " has length " + std::to_string(t.exponent.size()) +
                            ", expected " + std::to_string(n));
        }
        for (const Rational& e : t.exponent) {
            if (flavor == Flavor::Poly && (!is_integer(e) || sgn(e) < 0)) {
                throw Error(ErrorKind::FlavorViolation,
                            "polynomial exponent " + to_string(t.exponent) + " must be a nonnegative integer vector");
            }
            if (flavor == Flavor::Laurent && !is_integer(e)) {
                throw Error(ErrorKind::FlavorViolation,
                            "Laurent exponent " + to_string(t.exponent) + " must be an integer vector");
            }
        }
        if (semiring == Semiring::R && t.coefficient.is_nu()) {
            throw Error(ErrorKind::TagViolation, "nu-tagged coefficient in a function over R");
        }
    }
}

void require_compatible(const TropFunction& f, const TropFunction& g) {
    if (f.n() != g.n()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "functions in " + std::to_string(f.n()) + " and " + std::to_string(g.n()) + " variables");
    }
    if (f.semiring() != g.semiring()) {
        throw Error(ErrorKind::SemiringMismatch, "cannot combine functions over R and over T");
    }
}

// Merge duplicates in a fresh term list; the result is sorted by exponent.
std::vector<Term> merge_terms(std::vector<Term> terms, Semiring s) {
    std::map<Point, ExtScalar> merged;
    for (Term& t : terms) {
        auto [it, inserted] = merged.try_emplace(std::move(t.exponent), t.coefficient);
        if (!inserted) it->second = semiring_add(it->second, t.coefficient, s);
    }
    std::vector<Term> out;
    out.reserve(merged.size());
    for (auto& [e, c] : merged) out.push_back(Term{e, c});
    return out;
}

}  // namespace

TropFunction::TropFunction(std::size_t n, Flavor flavor, Semiring semiring, std::vector<Term> terms)
    : n_(n), flavor_(flavor), semiring_(semiring), terms_(std::move(terms)) {
    validate(n_, flavor_, semiring_, terms_);
}

TropFunction make_function(std::size_t n, Flavor flavor, Semiring semiring, std::vector<Term> terms) {
    return TropFunction(n, flavor, semiring, std::move(terms));
}

ExtScalar eval(const TropFunction& f, const Point& x) {
    if (x.size() != f.n()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "point of dimension " + std::to_string(x.size()) + " for a function in " +
                        std::to_string(f.n()) + " variables");
    }
    ExtScalar best;
    bool first = true;
    for (const Term& t : f.terms()) {
        ExtScalar v{t.value_at(x), t.coefficient.tag};
        if (first) {
            best = std::move(v);
            first = false;
        } else {
            best = semiring_add(best, v, f.semiring());
        }
    }
    if (f.semiring() == Semiring::R) best.tag = Tag::Real;
    return best;
}

TropFunction canonicalize(const TropFunction& f) {
    return TropFunction(f.n(), f.flavor(), f.semiring(), merge_terms(f.terms(), f.semiring()));
}

bool is_canonical(const TropFunction& f) {
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (!(f.terms()[i - 1].exponent < f.terms()[i].exponent)) return false;
    }
    return true;
}

TropFunction trop_add(const TropFunction& f, const TropFunction& g) {
    require_compatible(f, g);
    std::vector<Term> all = f.terms();
    all.insert(all.end(), g.terms().begin(), g.terms().end());
    return TropFunction(f.n(), weakest(f.flavor(), g.flavor()), f.semiring(), merge_terms(std::move(all), f.semiring()));
}

TropFunction trop_mul(const TropFunction& f, const TropFunction& g) {
    require_compatible(f, g);
    std::vector<Term> products;
    products.reserve(f.size() * g.size());
    for (const Term& a : f.terms()) {
        for (const Term& b : g.terms()) {
            products.push_back(Term{add(a.exponent, b.exponent), semiring_mul(a.coefficient, b.coefficient, f.semiring())});
        }
    }
    return TropFunction(f.n(), weakest(f.flavor(), g.flavor()), f.semiring(), merge_terms(std::move(products), f.semiring()));
}

TropFunction trop_pow(const TropFunction& f, long m) {
    if (m < 1) throw Error(ErrorKind::NonPositivePower, "power must be a positive integer, got " + std::to_string(m));
    const Rational factor(m);
    std::vector<Term> scaled;
    scaled.reserve(f.size());
    for (const Term& t : f.terms()) {
        scaled.push_back(Term{scale(factor, t.exponent), ExtScalar{factor * t.coefficient.value, t.coefficient.tag}});
    }
    return TropFunction(f.n(), f.flavor(), f.semiring(), merge_terms(std::move(scaled), f.semiring()));
}

TropFunction project(const TropFunction& f) {
    std::vector<Term> plain = f.terms();
    for (Term& t : plain) t.coefficient.tag = Tag::Real;
    return TropFunction(f.n(), f.flavor(), Semiring::R, merge_terms(std::move(plain), Semiring::R));
}

TropFunction with_flavor(const TropFunction& f, Flavor flavor) {
    return TropFunction(f.n(), flavor, f.semiring(), f.terms());
}

TropFunction shift_exponents(const TropFunction& f, const Point& shift, Flavor flavor) {
    std::vector<Term> moved = f.terms();
    for (Term& t : moved) t.exponent = add(t.exponent, shift);
    return TropFunction(f.n(), flavor, f.semiring(), std::move(moved));
}

TropFunction add_constant(const TropFunction& f, const Rational& c) {
    std::vector<Term> moved = f.terms();
    for (Term& t : moved) t.coefficient.value += c;
    return TropFunction(f.n(), f.flavor(), f.semiring(), std::move(moved));
}

std::string to_string(const TropFunction& f) {
    std::string out = "max(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Term& t = f.terms()[i];
        if (i) out += ", ";
        out += to_string(t.coefficient) + ":";
        for (std::size_t j = 0; j < t.exponent.size(); ++j) out += (j ? " " : "") + to_string(t.exponent[j]);
    }
    return out + ")";
}

}  // namespace tropnull
