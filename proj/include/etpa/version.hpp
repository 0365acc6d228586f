#pragma once

namespace etpa {

// bumped manually on releases; written into CSV provenance headers
inline constexpr const char* version_string = "etpa 1.0.0";

}
