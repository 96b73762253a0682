#pragma once

#include <cstdint>

namespace capsula::minilang {

// 64-bit LCG (Knuth MMIX constants). Chosen over std::mt19937 so the draw
// sequence is trivially recomputable in tests and across reimplementations.
inline constexpr std::uint64_t kRngMultiplier = 6364136223846793005ULL;
inline constexpr std::uint64_t kRngIncrement = 1442695040888963407ULL;

struct RngState {
  std::uint64_t s = 0;
  friend bool operator==(RngState, RngState) = default;
};

struct RngDraw {
  RngState next;
  double value; // in [0, 1)
};

/// s' = (mul * s + inc) mod 2^64; value = (s' >> 11) / 2^53.
inline RngDraw next_random(RngState state) {
  RngState next{kRngMultiplier * state.s + kRngIncrement};
  double value = static_cast<double>(next.s >> 11) / 9007199254740992.0; // 2^53
  return {next, value};
}

} // namespace capsula::minilang
