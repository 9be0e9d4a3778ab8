#pragma once

#include "dsa/model.hpp"
#include "dsa/rng.hpp"

namespace dsa {

// B_i law: integer-uniform over {lo, ..., hi}; lo == hi pins the value.
struct IntRange {
    int lo = 1;
    int hi = 1;
};

// R_i law: real-uniform over [lo, hi]; lo == hi pins the value.
struct RealRange {
    double lo = 1.0;
    double hi = 1.0;
};

// Random-network parameters. Defaults follow the baseline 100x100 m region,
// N=25, F=10, B ~ U{1..3}, R ~ U[8,17].
struct GenParams {
    Region region{0.0, 100.0, 0.0, 100.0};
    int n = 25;
    int f = 10;
    IntRange bandwidth{1, 3};
    RealRange radius{8.0, 17.0};
    std::uint64_t seed = 0;
};

void validate(const GenParams& params);

// Positions uniform over the region, B_i and R_i from their laws. Fully
// determined by params.seed: the stream is mt19937_64(seed) and each
// transmitter draws x, y, bandwidth, radius in that order.
Scenario generate_scenario(const GenParams& params);

}  // namespace dsa
