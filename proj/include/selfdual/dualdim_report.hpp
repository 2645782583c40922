#pragma once

#include "selfdual/numbers.hpp"

namespace selfdual {

// One random evaluation point of the dual parameterization.
struct DualSample {
    IntVec lambda;  // kernel coordinates, all <b_i, lambda> nonzero off J
    IntVec t;       // torus point, all coordinates nonzero
};

// Result of the Jacobian-rank probe of the dual variety's rational
// parameterization. computed_dim is a high-probability exact value and a
// certified lower bound; it never exceeds expected_dim.
struct DualDimReport {
    long expected_dim = 0;  // n + c_k - 1
    long computed_dim = 0;  // max Jacobian rank over the samples, minus 1
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<DualSample> samples;
    std::vector<std::size_t> degenerate_coordinates;  // J: forced-zero coords
    bool agrees_with_verdict = false;
};

}  // namespace selfdual
