#pragma once

// Text and JSON formats.
//
// Instance files (.trop):
//
//     # comment
//     n=2 flavor=poly semiring=R
//     F: 0:1 0 ; 0:0 1 ; 0:0 0
//     G1: 1v:1 1 ; 0:0 0
//
// Each term is `coef[v]:e1 ... en`; a trailing `v` on the coefficient marks
// it ν. The function named F is the target, every other line a generator, in
// file order. Certificates and reports are JSON with exact "p/q" strings.

#include "tropnull/certify.hpp"
#include "tropnull/check.hpp"
#include "tropnull/core.hpp"
#include "tropnull/regions.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tropnull::io {

struct Instance {
    std::size_t n = 1;
    Flavor flavor = Flavor::Poly;
    Semiring semiring = Semiring::R;
    TropFunction f;
    std::vector<TropFunction> gens;
    std::vector<std::string> gen_names;
};

/// Throws SyntaxError(line, column) or Error(InvariantViolation).
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);
Instance read_instance_file(const std::string& path);

/// The ideal flavor an instance asks for when none is given.
IdealFlavor default_ideal_flavor(const Instance& inst);

/// The function called `name` ("F" or a generator name).
const TropFunction& function_named(const Instance& inst, const std::string& name);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const TropFunction& f);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const Verdict& v);

/// Cofactors are built in n variables over the given semiring; flavor falls
/// back to `fallback` when the object carries none. Throws InvariantViolation.
Certificate certificate_from_json(const nlohmann::json& j, std::size_t n, Semiring semiring, IdealFlavor fallback);

/// "DilationFitFailed(2)" for generator failures, the bare reason otherwise.
std::string failure_label(const Failure& f);

/// One polyline per segment, y axis pointing up. Coordinates are decimal
/// approximations with `precision` significant digits.
std::string amoeba_svg(const std::vector<Segment>& segments, const BoundingBox& box, int precision = 6);

}  // namespace tropnull::io
