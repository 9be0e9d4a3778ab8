#pragma once

#include "dsa/harness.hpp"

#include <string>
#include <vector>

namespace dsa {

// Canned sweep configurations matching the published experiment families.
// Names: fig3a fig3b fig3c fig3d fig4a fig4b fig5a fig5b.
std::vector<std::string> preset_names();

// Throws std::invalid_argument for unknown names. runs_override > 0 replaces
// the preset's default run count.
SweepSpec make_preset(const std::string& name, std::uint64_t master_seed, int runs_override = 0);

}  // namespace dsa
