#include "dsa/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dsa {

bool overlaps(const Transmitter& a, const Transmitter& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double reach = a.radius + b.radius;
    return dx * dx + dy * dy < reach * reach;
}

namespace {

// Antiderivative of sqrt(r^2 - x^2): area under the upper semicircle arc.
double arc_integral(double x, double r) {
    x = std::clamp(x, -r, r);
    return 0.5 * (x * std::sqrt(std::max(0.0, r * r - x * x)) + r * r * std::asin(x / r));
}

}  // namespace

double disk_rect_intersection_area(double cx, double cy, double r, const Region& rect) {
    // Work in circle-centered coordinates: rectangle [ax,bx] x [ay,by].
    const double ax = rect.x_min - cx;
    const double bx = rect.x_max - cx;
    const double ay = rect.y_min - cy;
    const double by = rect.y_max - cy;

    const double lo = std::max(ax, -r);
    const double hi = std::min(bx, r);
    if (lo >= hi || by <= -r || ay >= r) return 0.0;

    // The vertical slice at x covered by both shapes is
    //   [max(ay, -c(x)), min(by, c(x))],  c(x) = sqrt(r^2 - x^2).
    // Between breakpoints, each bound sticks to one branch, so the slice
    // length integrates in closed form via arc_integral.
    std::array<double, 6> cuts{lo, hi, 0.0, 0.0, 0.0, 0.0};
    std::size_t ncuts = 2;
    auto add_crossings = [&](double level) {
        if (std::abs(level) < r) {
            const double x = std::sqrt(r * r - level * level);
            for (double c : {-x, x}) {
                if (c > lo && c < hi) cuts[ncuts++] = c;
            }
        }
    };
    add_crossings(by);  // where c(x) crosses the top edge
    add_crossings(ay);  // where -c(x) crosses the bottom edge
    std::sort(cuts.begin(), cuts.begin() + ncuts);

    double area = 0.0;
    for (std::size_t k = 0; k + 1 < ncuts; ++k) {
        const double a = cuts[k];
        const double b = cuts[k + 1];
        if (b - a <= 0.0) continue;
        const double mid = 0.5 * (a + b);
        const double c_mid = std::sqrt(std::max(0.0, r * r - mid * mid));

        const double top_mid = std::min(by, c_mid);
        const double bot_mid = std::max(ay, -c_mid);
        if (top_mid <= bot_mid) continue;

        const double seg = arc_integral(b, r) - arc_integral(a, r);
        const double top_int = (by <= c_mid) ? by * (b - a) : seg;
        const double bot_int = (ay >= -c_mid) ? ay * (b - a) : -seg;
        area += top_int - bot_int;
    }
    return area;
}

double coverage_correction(const Transmitter& t, const Region& region) {
    if (!region.contains(t.x, t.y)) {
        throw std::invalid_argument("coverage_correction: transmitter center outside region");
    }
    const double full = M_PI * t.radius * t.radius;
    const double area = disk_rect_intersection_area(t.x, t.y, t.radius, region);
    return std::clamp(area / full, 0.0, 1.0);
}

}  // namespace dsa
