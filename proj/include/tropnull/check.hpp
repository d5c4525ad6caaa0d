#pragma once

// Radical-membership criteria for tropical ideals.
//
// Every checker walks the regions of F (components of R^n \ A(F)) and looks
// for the lowest-index generator that is affine on the region; flavors differ
// in the extra conditions imposed on that generator:
//
//   Standard    gradient condition: ∂F_i/∂x_j > 0 on D forces ∂F/∂x_j > 0
//   Laurent     none
//   Pl          none (rational exponents)
//   Restricted  Standard, plus every generator's Newton polytope fits in a
//               dilate of Δ(F) via a monomial translate
//   Extended    over T: regions with a real dominating coefficient need a
//               generator whose dominating coefficient is real there too

#include "tropnull/core.hpp"
#include "tropnull/regions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropnull {

enum class IdealFlavor { Standard, Laurent, Restricted, Pl, Extended };
enum class TagClass { Pi, PiNu };
enum class FailureReason { NoLinearGenerator, GradientConditionFailed, TagClassMismatch, DilationFitFailed };

const char* to_string(IdealFlavor f);
const char* to_string(TagClass c);
const char* to_string(FailureReason r);
/// Accepts "standard", "laurent", "restricted", "pl", "extended".
std::optional<IdealFlavor> parse_ideal_flavor(const std::string& name);

struct Assignment {
    std::size_t region = 0;     // index into Verdict::regions.regions
    std::size_t generator = 0;  // 0-based
    DominantTerm generator_term;
    bool e1_ok = true;
    std::optional<TagClass> tag_class;  // set for Extended only
};

struct Failure {
    std::optional<std::size_t> region;
    FailureReason reason;
    std::optional<std::size_t> generator;  // the offending generator for DilationFitFailed
};

struct Verdict {
    bool member = false;
    IdealFlavor flavor = IdealFlavor::Standard;
    RegionDecomposition regions;
    std::vector<Assignment> assignments;
    std::vector<Failure> failures;
};

/// For each j, grad_fi[j] > 0 implies grad_f[j] > 0.
bool condition_e1(const Point& grad_f, const Point& grad_fi);

Verdict check_standard(const TropFunction& f, const std::vector<TropFunction>& gens);
Verdict check_laurent(const TropFunction& f, const std::vector<TropFunction>& gens);
Verdict check_restricted(const TropFunction& f, const std::vector<TropFunction>& gens);
Verdict check_pl(const TropFunction& f, const std::vector<TropFunction>& gens);
Verdict check_extended(const TropFunction& f, const std::vector<TropFunction>& gens);
Verdict check(const TropFunction& f, const std::vector<TropFunction>& gens, IdealFlavor flavor);

struct TagPartition {
    std::vector<std::size_t> pi;     // region indices, real dominating coefficient
    std::vector<std::size_t> pi_nu;  // ν dominating coefficient
    RegionDecomposition regions;
};

/// Splits the regions of F (over T) by the tag of the dominating coefficient.
TagPartition partition_regions_T(const TropFunction& f);

/// Function flavor a cofactor must have under the given ideal flavor.
Flavor cofactor_flavor(IdealFlavor flavor);

}  // namespace tropnull
