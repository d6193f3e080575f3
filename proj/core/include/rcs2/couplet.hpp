// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rcs2/error.hpp"

namespace rcs2 {

// One payload couplet: the pair of bits the interleaver moves as a unit.
struct Couplet {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Couplet&, const Couplet&) = default;
};

// Ordered block of couplets; input and output payload of the interleaver.
struct CoupletBlock {
  std::vector<Couplet> couplets;

  int size() const noexcept { return static_cast<int>(couplets.size()); }

  // Flat bit order a0, b0, a1, b1, ...
  std::vector<std::uint8_t> to_bits() const {
    std::vector<std::uint8_t> bits;
    bits.reserve(couplets.size() * 2);
    for (const Couplet& c : couplets) {
      bits.push_back(c.a);
      bits.push_back(c.b);
    }
    return bits;
  }

  // Inverse of to_bits; bit values must be 0 or 1.
  static CoupletBlock from_bits(const std::vector<std::uint8_t>& bits) {
    if (bits.size() % 2 != 0) {
      throw Error(Errc::LengthMismatch, "flat bit sequence has odd length");
    }
    CoupletBlock block;
    block.couplets.resize(bits.size() / 2);
    for (std::size_t j = 0; j < block.couplets.size(); ++j) {
      block.couplets[j] = Couplet{bits[2 * j], bits[2 * j + 1]};
    }
    return block;
  }

  friend bool operator==(const CoupletBlock&, const CoupletBlock&) = default;
};

}  // namespace rcs2
