#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsa {

using TxId = std::uint32_t;

// Axis-aligned rectangular deployment region, coordinates in meters.
struct Region {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    bool contains(double x, double y) const {
        return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
    }
};

// One base station: circular coverage of radius `radius` centered at (x, y),
// demanding `bandwidth` contiguous spectrum units.
struct Transmitter {
    TxId id = 0;  // ids within a scenario are 1..N, unique
    double x = 0.0;
    double y = 0.0;
    int bandwidth = 1;    // B_i, integral units >= 1
    double radius = 1.0;  // R_i, meters > 0
};

// A network instance: region, transmitter list (any storage order; ids are a
// permutation of 1..N) and the number of usable spectrum units F.
struct Scenario {
    Region region;
    std::vector<Transmitter> transmitters;
    int total_bandwidth = 1;  // F

    std::size_t size() const { return transmitters.size(); }
};

// Throw std::invalid_argument describing the first violated invariant.
void validate(const Region& region);
void validate(const Scenario& scenario);

// Transmitters indexed by id (entry 0 is id 1). Requires a valid scenario.
std::vector<const Transmitter*> transmitters_by_id(const Scenario& scenario);

}  // namespace dsa
