// Helpers shared by the unit tests.
#pragma once
#include <vector>

#include "lrc/lrc.hpp"

namespace lrc::test_support {

// Strictly positive, normalized example distribution drawn from rng.
inline ExampleDistribution random_distribution(std::size_t m, RngStream& rng) {
    std::vector<double> p(m);
    double s = 0.0;
    for (auto& v : p) s += (v = 0.05 + rng.uniform01());
    for (auto& v : p) v /= s;
    return ExampleDistribution(p);
}

inline TargetPrior random_prior(std::size_t n, RngStream& rng) {
    std::vector<double> q(n);
    double s = 0.0;
    for (auto& v : q) s += (v = 0.05 + rng.uniform01());
    for (auto& v : q) v /= s;
    return TargetPrior(q);
}

} // namespace lrc::test_support
