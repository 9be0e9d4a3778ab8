#include "dsa/scenario_gen.hpp"

#include <cmath>
#include <stdexcept>

namespace dsa {

void validate(const GenParams& params) {
    validate(params.region);
    if (params.n < 1) throw std::invalid_argument("gen params: n must be >= 1");
    if (params.f < 1) throw std::invalid_argument("gen params: f must be >= 1");
    if (params.bandwidth.lo < 1 || params.bandwidth.lo > params.bandwidth.hi) {
        throw std::invalid_argument("gen params: bandwidth range must satisfy 1 <= lo <= hi");
    }
    if (!(params.radius.lo > 0.0) || !(params.radius.lo <= params.radius.hi) ||
        !std::isfinite(params.radius.hi)) {
        throw std::invalid_argument("gen params: radius range must satisfy 0 < lo <= hi");
    }
}

Scenario generate_scenario(const GenParams& params) {
    validate(params);
    RandomStream rng(params.seed);

    Scenario scenario;
    scenario.region = params.region;
    scenario.total_bandwidth = params.f;
    scenario.transmitters.reserve(params.n);
    for (int i = 1; i <= params.n; ++i) {
        Transmitter t;
        t.id = static_cast<TxId>(i);
        t.x = rng.next_real(params.region.x_min, params.region.x_max);
        t.y = rng.next_real(params.region.y_min, params.region.y_max);
        t.bandwidth = rng.next_int(params.bandwidth.lo, params.bandwidth.hi);
        t.radius = rng.next_real(params.radius.lo, params.radius.hi);
        scenario.transmitters.push_back(t);
    }
    return scenario;
}

}  // namespace dsa
