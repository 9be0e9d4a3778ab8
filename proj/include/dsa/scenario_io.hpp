#pragma once

#include "dsa/metrics.hpp"
#include "dsa/model.hpp"

#include <string>

namespace dsa {

// Scenario document:
//   {"region":{"x_min","x_max","y_min","y_max"}, "total_bandwidth":F,
//    "transmitters":[{"id","x","y","bandwidth","radius"},...]}
// Round-trips exactly: fields, ids, and transmitter order are preserved.
std::string scenario_to_json(const Scenario& scenario);

// Parses and validates. Throws std::invalid_argument on malformed documents.
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario_file(const std::string& path);
void save_scenario_file(const Scenario& scenario, const std::string& path);

// Flat object with keys fi, bu, ca, bc, tf.
std::string metrics_to_json(const MetricsReport& report);

}  // namespace dsa
