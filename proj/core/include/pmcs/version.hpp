#pragma once

#include <string_view>

namespace pmcs {

inline constexpr std::string_view kArtifactName = "pmcs";
inline constexpr std::string_view kArtifactVersion = "0.1.0";

// Identifier of the random number generator family baked into this release.
// Stored seeds are only guaranteed to reproduce outputs while this id is
// unchanged; bump it if the generator or any in-repo distribution changes.
inline constexpr std::string_view kPrngId = "xoshiro256++/splitmix64-v1";

}  // namespace pmcs
