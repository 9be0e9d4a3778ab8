#pragma once

namespace dsa {

inline constexpr const char* kArtifactName = "spectrum-dsa";
inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace dsa
