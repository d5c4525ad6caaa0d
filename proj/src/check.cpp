#include "tropnull/check.hpp"

#include "tropnull/error.hpp"
#include "tropnull/newton.hpp"

#include <algorithm>

namespace tropnull {

const char* to_string(IdealFlavor f) {
    switch (f) {
    case IdealFlavor::Standard: return "standard";
    case IdealFlavor::Laurent: return "laurent";
    case IdealFlavor::Restricted: return "restricted";
    case IdealFlavor::Pl: return "pl";
    case IdealFlavor::Extended: return "extended";
    }
    return "?";
}

const char* to_string(TagClass c) { return c == TagClass::Pi ? "pi" : "pi_nu"; }

const char* to_string(FailureReason r) {
    switch (r) {
    case FailureReason::NoLinearGenerator: return "NoLinearGenerator";
    case FailureReason::GradientConditionFailed: return "GradientConditionFailed";
    case FailureReason::TagClassMismatch: return "TagClassMismatch";
    case FailureReason::DilationFitFailed: return "DilationFitFailed";
    }
    return "?";
}

std::optional<IdealFlavor> parse_ideal_flavor(const std::string& name) {
    for (IdealFlavor f : {IdealFlavor::Standard, IdealFlavor::Laurent, IdealFlavor::Restricted, IdealFlavor::Pl,
                          IdealFlavor::Extended}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

Flavor cofactor_flavor(IdealFlavor flavor) {
    switch (flavor) {
    case IdealFlavor::Laurent: return Flavor::Laurent;
    case IdealFlavor::Pl: return Flavor::Plq;
    default: return Flavor::Poly;
    }
}

bool condition_e1(const Point& grad_f, const Point& grad_fi) {
    if (grad_f.size() != grad_fi.size()) throw Error(ErrorKind::DimensionMismatch, "gradients of different length");
    for (std::size_t j = 0; j < grad_f.size(); ++j) {
        if (sgn(grad_fi[j]) > 0 && sgn(grad_f[j]) <= 0) return false;
    }
    return true;
}

namespace {

struct Rules {
    IdealFlavor flavor;
    bool gradient_condition;
    Semiring semiring;
    std::vector<Flavor> allowed;
};

void require_inputs(const TropFunction& f, const std::vector<TropFunction>& gens, const Rules& rules) {
    if (gens.empty()) throw Error(ErrorKind::EmptyInput, "an ideal needs at least one generator");
    auto check_one = [&](const TropFunction& g, const std::string& name) {
        if (g.n() != f.n()) throw Error(ErrorKind::DimensionMismatch, name + " has a different variable count");
        if (g.semiring() != rules.semiring) {
            throw Error(ErrorKind::FlavorMismatch, name + " is over " + to_string(g.semiring()) + ", the " +
                                                       to_string(rules.flavor) + " criterion needs " +
                                                       to_string(rules.semiring));
        }
        if (std::find(rules.allowed.begin(), rules.allowed.end(), g.flavor()) == rules.allowed.end()) {
            throw Error(ErrorKind::FlavorMismatch, name + " has flavor " + std::string(to_string(g.flavor())) +
                                                       ", not accepted by the " + to_string(rules.flavor) +
                                                       " criterion");
        }
    };
    check_one(f, "F");
    for (std::size_t i = 0; i < gens.size(); ++i) check_one(gens[i], "generator " + std::to_string(i + 1));
}

std::optional<DominantTerm> generator_on(const TropFunction& g, const Region& region) {
    if (g.size() == 1) {
        // Monomials (in particular the constants a^ν) are affine everywhere.
        const Term& t = g.terms().front();
        return DominantTerm{0, t.exponent, t.coefficient};
    }
    return linear_on(g, region.poly);
}

Verdict assign_regions(const TropFunction& f, const std::vector<TropFunction>& gens, const Rules& rules) {
    require_inputs(f, gens, rules);
    Verdict v{false, rules.flavor, decompose(f), {}, {}};
    std::vector<TropFunction> canon;
    canon.reserve(gens.size());
    for (const TropFunction& g : gens) canon.push_back(canonicalize(g));

    for (std::size_t r = 0; r < v.regions.regions.size(); ++r) {
        const Region& region = v.regions.regions[r];
        const bool real_region = !region.coefficient.is_nu();
        FailureReason reason = FailureReason::NoLinearGenerator;
        bool assigned = false;
        for (std::size_t i = 0; i < canon.size() && !assigned; ++i) {
            std::optional<DominantTerm> dt = generator_on(canon[i], region);
            if (!dt) continue;
            const bool e1 = condition_e1(region.exponent, dt->exponent);
            if (rules.gradient_condition && !e1) {
                reason = std::max(reason, FailureReason::GradientConditionFailed);
                continue;
            }
            if (rules.flavor == IdealFlavor::Extended && real_region && dt->coefficient.is_nu()) {
                reason = std::max(reason, FailureReason::TagClassMismatch);
                continue;
            }
            Assignment a{r, i, std::move(*dt), e1, std::nullopt};
            if (rules.flavor == IdealFlavor::Extended) a.tag_class = real_region ? TagClass::Pi : TagClass::PiNu;
            v.assignments.push_back(std::move(a));
            assigned = true;
        }
        if (!assigned) v.failures.push_back(Failure{r, reason, std::nullopt});
    }
    v.member = v.failures.empty();
    return v;
}

const std::vector<Flavor> kPolyOnly{Flavor::Poly};
const std::vector<Flavor> kLaurent{Flavor::Poly, Flavor::Laurent};
const std::vector<Flavor> kAny{Flavor::Poly, Flavor::Laurent, Flavor::Plq};

}  // namespace

Verdict check_standard(const TropFunction& f, const std::vector<TropFunction>& gens) {
    return assign_regions(f, gens, Rules{IdealFlavor::Standard, true, Semiring::R, kPolyOnly});
}

Verdict check_laurent(const TropFunction& f, const std::vector<TropFunction>& gens) {
    return assign_regions(f, gens, Rules{IdealFlavor::Laurent, false, Semiring::R, kLaurent});
}

Verdict check_pl(const TropFunction& f, const std::vector<TropFunction>& gens) {
    return assign_regions(f, gens, Rules{IdealFlavor::Pl, false, Semiring::R, kAny});
}

Verdict check_restricted(const TropFunction& f, const std::vector<TropFunction>& gens) {
    Verdict v = assign_regions(f, gens, Rules{IdealFlavor::Restricted, true, Semiring::R, kPolyOnly});
    const newton::NewtonPolytope outer = newton::newton_polytope(f);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!newton::monomial_fit_exists(newton::newton_polytope(gens[i]), outer)) {
            v.failures.push_back(Failure{std::nullopt, FailureReason::DilationFitFailed, i});
        }
    }
    v.member = v.failures.empty();
    return v;
}

Verdict check_extended(const TropFunction& f, const std::vector<TropFunction>& gens) {
    return assign_regions(f, gens, Rules{IdealFlavor::Extended, true, Semiring::T, kPolyOnly});
}

Verdict check(const TropFunction& f, const std::vector<TropFunction>& gens, IdealFlavor flavor) {
    switch (flavor) {
    case IdealFlavor::Standard: return check_standard(f, gens);
    case IdealFlavor::Laurent: return check_laurent(f, gens);
    case IdealFlavor::Restricted: return check_restricted(f, gens);
    case IdealFlavor::Pl: return check_pl(f, gens);
    case IdealFlavor::Extended: return check_extended(f, gens);
    }
    throw Error(ErrorKind::FlavorMismatch, "unknown ideal flavor");
}

TagPartition partition_regions_T(const TropFunction& f) {
    if (f.semiring() != Semiring::T) throw Error(ErrorKind::FlavorMismatch, "tag partition needs a function over T");
    TagPartition out{{}, {}, decompose(f)};
    for (std::size_t r = 0; r < out.regions.regions.size(); ++r) {
        (out.regions.regions[r].coefficient.is_nu() ? out.pi_nu : out.pi).push_back(r);
    }
    return out;
}

}  // namespace tropnull
