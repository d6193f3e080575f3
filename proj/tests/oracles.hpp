// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force oracles for cross-checking the library. Everything here is
// re-derived from the closed-form definitions with plain loops and shares
// no code with the implementation under test.

#include <cstdint>
#include <functional>
#include <vector>

#include "rcs2/couplet.hpp"
#include "rcs2/error.hpp"
#include "rcs2/params.hpp"

namespace oracles {

inline long long q_offset(const rcs2::ParameterSet& s, int j) {
  switch (j % 4) {
    case 0: return 0;
    case 1: return 4ll * s.q1;
    case 2: return 4ll * s.q0 * s.p + 4ll * s.q2;
    default: return 4ll * s.q0 * s.p + 4ll * s.q3;
  }
}

inline int pi(const rcs2::ParameterSet& s, int j) {
  return static_cast<int>((1ll * s.p * j + q_offset(s, j) + 3) % s.n);
}

// Naive two-loop gather: recompute the source index per output position,
// then swap the couplet when the source index is odd.
inline rcs2::CoupletBlock gather_interleave(const rcs2::CoupletBlock& in,
                                            const rcs2::ParameterSet& s) {
  rcs2::CoupletBlock out;
  out.couplets.resize(in.couplets.size());
  for (int j = 0; j < s.n; ++j) {
    const int source = pi(s, j);
    rcs2::Couplet c = in.couplets[static_cast<std::size_t>(source)];
    if (source % 2 == 1) {
      const std::uint8_t tmp = c.a;
      c.a = c.b;
      c.b = tmp;
    }
    out.couplets[static_cast<std::size_t>(j)] = c;
  }
  return out;
}

// Stride enumeration: source indexes feeding residue vector k (k = 0..3).
inline std::vector<int> residue_sources(const rcs2::ParameterSet& s, int k) {
  std::vector<int> sources;
  sources.reserve(static_cast<std::size_t>(s.n / 4));
  for (int m = 0; m < s.n / 4; ++m) {
    sources.push_back(static_cast<int>((pi(s, k) + 4ll * s.p * m) % s.n));
  }
  return sources;
}

inline int popcount(const rcs2::CoupletBlock& block) {
  int ones = 0;
  for (const rcs2::Couplet& c : block.couplets) ones += c.a + c.b;
  return ones;
}

// Runs fn and reports the Errc it threw, or nullopt-like -1 sentinel free
// form: tests use this to assert on specific codes.
inline bool throws_code(const std::function<void()>& fn, rcs2::Errc expected) {
  try {
    fn();
  } catch (const rcs2::Error& e) {
    return e.code() == expected;
  }
  return false;
}

}  // namespace oracles
