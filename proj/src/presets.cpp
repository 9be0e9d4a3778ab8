#include "dsa/presets.hpp"

#include <stdexcept>

namespace dsa {

namespace {

std::vector<double> inclusive_range(int lo, int hi) {
    std::vector<double> values;
    for (int v = lo; v <= hi; ++v) values.push_back(static_cast<double>(v));
    return values;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b", "fig5a", "fig5b"};
}

SweepSpec make_preset(const std::string& name, std::uint64_t master_seed, int runs_override) {
    SweepSpec spec;  // base defaults to the Table-1 baseline laws
    spec.master_seed = master_seed;

    if (name == "fig3a" || name == "fig3b" || name == "fig3c") {
        // Heterogeneous N-sweep; the FI panel uses 500 runs, BU and TF use 50.
        spec.variable = SweepVariable::N;
        spec.values = inclusive_range(5, 30);
        spec.runs = (name == "fig3a") ? 500 : 50;
    } else if (name == "fig3d") {
        // Homogeneous networks: R_i = 12, B_i = 2.
        spec.variable = SweepVariable::N;
        spec.values = inclusive_range(5, 30);
        spec.runs = 50;
        spec.base.bandwidth = {2, 2};
        spec.base.radius = {12.0, 12.0};
    } else if (name == "fig4a" || name == "fig4b") {
        spec.variable = SweepVariable::F;
        spec.values = inclusive_range(5, 15);
        spec.runs = 50;
    } else if (name == "fig5a") {
        spec.variable = SweepVariable::RadiusMax;
        spec.values = inclusive_range(8, 30);
        spec.runs = 50;
    } else if (name == "fig5b") {
        spec.variable = SweepVariable::BandwidthMax;
        spec.values = inclusive_range(1, 8);
        spec.runs = 50;
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }

    if (runs_override > 0) spec.runs = runs_override;
    return spec;
}

}  // namespace dsa
