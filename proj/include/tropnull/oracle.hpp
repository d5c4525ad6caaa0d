#pragma once

// Brute-force reference implementations for tests. Nothing here sits on a
// decision path: regions are grid clusters, linearity is constancy of the
// argmax over a cluster, and polytope fits are searched exhaustively.

#include "tropnull/check.hpp"
#include "tropnull/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tropnull::oracle {

struct SampleSet {
    std::vector<Point> points;
    std::uint64_t seed = 0;
    Rational radius;  // points lie in [-radius, radius]^n
};

/// Deterministic in the seed; denominators at most 10^4.
SampleSet make_samples(std::size_t n, std::size_t count, std::uint64_t seed, const Rational& radius = 50);

struct SampleDiscrepancy {
    Point point;
    ExtScalar lhs;
    ExtScalar rhs;
};

/// Exact comparison (value and tag) at every sample, by direct evaluation
/// of the term lists. Throws DimensionMismatch / SemiringMismatch.
std::optional<SampleDiscrepancy> eval_equal_sampled(const TropFunction& f, const TropFunction& g,
                                                    const SampleSet& samples);

struct GridOptions {
    Rational step{1, 8};
    long min_radius = 20;
    int max_restricted_m = 32;
};

/// Half-width of the sampling box: at least min_radius and beyond every
/// pairwise tie point of the instance.
long sampling_radius(const TropFunction& f, const std::vector<TropFunction>& gens, long min_radius);

/// The region criterion evaluated on a grid. Only n <= 2; throws DimensionTooHigh.
Verdict criterion_by_sampling(const TropFunction& f, const std::vector<TropFunction>& gens, IdealFlavor flavor,
                              const GridOptions& options = {});

/// Some t ∈ Z^n_{>=0} and m <= max_m with t + inner ⊆ m·conv(outer), found by
/// enumeration; membership in the hull is tested on simplices of outer.
bool monomial_fit_bruteforce(const std::vector<Point>& inner, const std::vector<Point>& outer, int max_m);

}  // namespace tropnull::oracle
