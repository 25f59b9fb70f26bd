#pragma once

namespace drx {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCheckpointFormat = "DREXPLAIN-CKPT-1";

}  // namespace drx
