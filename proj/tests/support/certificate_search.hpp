#pragma once

#include "tropnull/certify.hpp"

#include <optional>

namespace tropnull::testing {

/// Decides whether any certificate with power m exists, cofactors unrestricted
/// beyond the flavor (Standard: Z^n_{>=0} exponents, Laurent: Z^n, Pl: Q^n).
///
/// Every cofactor term x^e + a obeys x^e F_i + a <= mF, so a is at most
/// a_e = inf (mF - x^e F_i). The sum reaches mF on a region D only if some
/// single affine piece equals mF's piece there, which forces
/// e = m·ω_D - ω' for a term ω' of F_i and a_e + c' = m·c_D. Checking those
/// finitely many candidates is exact. Returns the certificate made of the
/// winning pieces.
std::optional<Certificate> certificate_at(const TropFunction& f, const std::vector<TropFunction>& gens, long m,
                                          IdealFlavor flavor);

}  // namespace tropnull::testing
