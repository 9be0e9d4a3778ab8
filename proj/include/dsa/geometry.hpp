#pragma once

#include "dsa/model.hpp"

namespace dsa {

// Coverage disks overlap iff the center distance is strictly below the sum of
// radii. Tangent circles (zero-area contact) do not count as overlapping.
bool overlaps(const Transmitter& a, const Transmitter& b);

// Exact area of disk(center=(cx,cy), radius=r) intersected with the rectangle.
// Closed-form segment decomposition, no sampling.
double disk_rect_intersection_area(double cx, double cy, double r, const Region& rect);

// C_i: fraction of the coverage disk that lies inside the region, in [0, 1].
// Throws std::invalid_argument if the transmitter's center is outside the
// region (malformed scenario).
double coverage_correction(const Transmitter& t, const Region& region);

}  // namespace dsa
