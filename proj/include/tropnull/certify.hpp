#pragma once

// Certificates "F^m" = ⊕_{i∈J} h_i F_i and their verification.
//
// Cofactors come from the region assignment of a member verdict: a region D
// assigned to generator i contributes the affine piece
//   L_{D,m} = (m·ω_D − ω_{i,D}) · x + (m·c_D − c_{i,D})
// to h_i. The power m starts at explicit_m_bound and doubles until the
// verifier accepts.

#include "tropnull/check.hpp"
#include "tropnull/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropnull {

struct Certificate {
    long m = 1;
    IdealFlavor flavor = IdealFlavor::Standard;
    std::vector<std::size_t> J;           // 0-based, increasing
    std::vector<TropFunction> cofactors;  // cofactors[k] multiplies generator J[k]
};

struct Discrepancy {
    Point point;
    ExtScalar lhs;  // F^m
    ExtScalar rhs;  // ⊕ h_i F_i
};

enum class VerifyStatus { Pass, Fail };
const char* to_string(VerifyStatus s);

struct VerificationReport {
    VerifyStatus status = VerifyStatus::Fail;
    bool symbolic_equal = false;
    std::size_t sampled_points_checked = 0;
    std::size_t cells_checked = 0;  // refinement cells and strata, T only
    std::optional<Discrepancy> first_discrepancy;
    std::string message;

    bool passed() const { return status == VerifyStatus::Pass; }
};

struct VerifyOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 0x7f4a7c15u;
};

/// max(m₁, m₂, 1) for the assignment in a member verdict (plus, for the
/// restricted flavor, the least m admitting every monomial padding).
/// Throws NotAMember.
long explicit_m_bound(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& verdict);

/// The cofactors built from the verdict at a fixed m, without verification.
Certificate construct_at(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& verdict, long m);

struct SynthesisResult {
    Certificate certificate;
    long bound = 1;
    int escalations = 0;
    VerificationReport report;
};

/// Throws NotAMember, or EscalationExhausted when no m up to bound·2^max_escalations verifies.
SynthesisResult synthesize_detailed(const TropFunction& f, const std::vector<TropFunction>& gens,
                                    const Verdict& verdict, int max_escalations = 20,
                                    const VerifyOptions& options = {});
Certificate synthesize(const TropFunction& f, const std::vector<TropFunction>& gens, const Verdict& verdict,
                       int max_escalations = 20);

/// Never throws on a mismatched certificate; structural problems are a FAIL.
VerificationReport verify(const TropFunction& f, const std::vector<TropFunction>& gens, const Certificate& cert,
                          const VerifyOptions& options = {});

/// F' = x^a F, F_i' = x^{b_i} F_i with every exponent of F' at least 1 and
/// every exponent of F_i' nonnegative.
struct LaurentShift {
    TropFunction f;
    std::vector<TropFunction> gens;
    Point a;
    std::vector<Point> b;
};

/// Polynomial inputs are accepted as Laurent ones. Throws FlavorMismatch for
/// functions over T.
LaurentShift laurent_shift(const TropFunction& f, const std::vector<TropFunction>& gens);

/// (m, h_i') on the shifted instance to (m, h_i' + ⟨b_i − m·a, x⟩).
Certificate unshift(const LaurentShift& shift, const Certificate& shifted, IdealFlavor flavor);

}  // namespace tropnull
