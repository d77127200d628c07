#pragma once

namespace hypack {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "hypack/1";

}  // namespace hypack
