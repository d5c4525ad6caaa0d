#pragma once

#include "tropnull/core.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tropnull::testing {

struct FunctionShape {
    std::size_t n = 1;
    std::size_t max_terms = 4;
    long min_exp = 0;
    long max_exp = 3;
    long coef_range = 5;  // |coefficient| <= coef_range
    long max_den = 4;
    Flavor flavor = Flavor::Poly;
    Semiring semiring = Semiring::R;
    double nu_probability = 0.0;
};

struct RandomInstance {
    TropFunction f;
    std::vector<TropFunction> gens;
    std::string kind;
};

/// Instances mixing unrelated generators with planted members: F among the
/// generators, F = A·B with A a generator, monomial generators, and shifted
/// copies of F.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi);
    bool chance(double p);
    Rational coefficient(const FunctionShape& s);
    Point exponent(const FunctionShape& s, long lo, long hi);
    TropFunction function(const FunctionShape& s, std::size_t terms, long lo, long hi);
    TropFunction function(const FunctionShape& s);
    TropFunction monomial(const FunctionShape& s);
    RandomInstance instance(const FunctionShape& s, std::size_t max_k);

private:
    std::mt19937_64 rng_;
};

}  // namespace tropnull::testing
