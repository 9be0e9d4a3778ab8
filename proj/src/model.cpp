#include "dsa/model.hpp"

#include <cmath>
#include <stdexcept>

namespace dsa {

void validate(const Region& region) {
    if (!std::isfinite(region.x_min) || !std::isfinite(region.x_max) ||
        !std::isfinite(region.y_min) || !std::isfinite(region.y_max)) {
        throw std::invalid_argument("region coordinates must be finite");
    }
    if (!(region.x_max > region.x_min) || !(region.y_max > region.y_min)) {
        throw std::invalid_argument("region must have positive width and height");
    }
}

void validate(const Scenario& scenario) {
    validate(scenario.region);
    if (scenario.total_bandwidth < 1) {
        throw std::invalid_argument("total_bandwidth must be >= 1");
    }
    const std::size_t n = scenario.transmitters.size();
    std::vector<bool> seen(n, false);
    for (const Transmitter& t : scenario.transmitters) {
        if (t.id < 1 || t.id > n) {
            throw std::invalid_argument("transmitter ids must be contiguous 1..N, got id " +
                                        std::to_string(t.id));
        }
        if (seen[t.id - 1]) {
            throw std::invalid_argument("duplicate transmitter id " + std::to_string(t.id));
        }
        seen[t.id - 1] = true;
        if (t.bandwidth < 1) {
            throw std::invalid_argument("transmitter bandwidth must be >= 1");
        }
        if (!(t.radius > 0.0) || !std::isfinite(t.radius)) {
            throw std::invalid_argument("transmitter radius must be positive and finite");
        }
        if (!std::isfinite(t.x) || !std::isfinite(t.y) ||
            !scenario.region.contains(t.x, t.y)) {
            throw std::invalid_argument("transmitter " + std::to_string(t.id) +
                                        " lies outside the region");
        }
    }
}

std::vector<const Transmitter*> transmitters_by_id(const Scenario& scenario) {
    std::vector<const Transmitter*> by_id(scenario.size(), nullptr);
    for (const Transmitter& t : scenario.transmitters) {
        by_id[t.id - 1] = &t;
    }
    return by_id;
}

}  // namespace dsa
