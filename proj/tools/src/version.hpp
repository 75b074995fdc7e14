#pragma once

#include <string_view>

namespace permpow::cli {

inline constexpr std::string_view kToolVersion = "permpow/0.1.0";

// Exit-code contract, fixed so that campaigns are scriptable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitVerifier = 4;
inline constexpr int kExitIo = 5;

} // namespace permpow::cli
