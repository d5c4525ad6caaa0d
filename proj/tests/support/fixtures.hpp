#pragma once

#include "tropnull/io.hpp"

#include <string>

namespace tropnull::testing {

// Parses one function written in the instance-file term syntax, e.g.
// fn(1, "0:2 ; 1:1 ; 2:0") for max(2x, x+1, 2).
inline TropFunction fn(std::size_t n, const std::string& terms, const std::string& flavor = "poly",
                       const std::string& semiring = "R") {
    const std::string text = "n=" + std::to_string(n) + " flavor=" + flavor + " semiring=" + semiring + "\nF: " + terms + "\n";
    return io::parse_instance(text).f;
}

inline Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.emplace_back(x);
    return p;
}

}  // namespace tropnull::testing
