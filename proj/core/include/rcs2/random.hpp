// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "rcs2/couplet.hpp"

namespace rcs2 {

// splitmix64 generator. Verification corpora must be reproducible across
// implementations and languages, so the exact sequence is part of the tool
// contract: state advances by the golden-gamma constant and the output is
// the finalized state. Do not change the constants.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

// Per-block stream seed. Injective in (n, trial) for n, trial < 2^32, so
// distinct blocks of one run never share a stream.
inline std::uint64_t block_seed(std::uint64_t base_seed, int n,
                                std::uint32_t trial) noexcept {
  const std::uint64_t h = SplitMix64(base_seed).next();
  return h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) ^
         trial;
}

// Deterministic random block: one splitmix64 draw per couplet,
// a = bit 0 and b = bit 1 of the draw.
inline CoupletBlock random_block(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CoupletBlock block;
  block.couplets.resize(n > 0 ? static_cast<std::size_t>(n) : 0);
  for (Couplet& c : block.couplets) {
    const std::uint64_t draw = rng.next();
    c.a = static_cast<std::uint8_t>(draw & 1);
    c.b = static_cast<std::uint8_t>((draw >> 1) & 1);
  }
  return block;
}

}  // namespace rcs2
