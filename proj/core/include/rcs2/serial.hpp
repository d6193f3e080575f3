// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rcs2/access_counters.hpp"
#include "rcs2/couplet.hpp"
#include "rcs2/params.hpp"

namespace rcs2 {

// The four additive offsets selected by the output index mod 4:
//   q(0) = 0
//   q(1) = 4*q1
//   q(2) = 4*q0*p + 4*q2
//   q(3) = 4*q0*p + 4*q3
struct QSelector {
  std::int64_t q[4] = {0, 0, 0, 0};

  static QSelector from(const ParameterSet& set) noexcept {
    const std::int64_t base = 4ll * set.q0 * set.p;
    return QSelector{{0, 4ll * set.q1, base + 4ll * set.q2, base + 4ll * set.q3}};
  }

  std::int64_t operator()(int j) const noexcept { return q[j & 3]; }
};

// Source index feeding output position j:
//   pi(j) = (p*j + q(j mod 4) + 3) mod n
// Gather convention throughout: out[j] reads in[pi(j)].
// Throws IndexOutOfRange unless 0 <= j < n. 64-bit intermediates, so no
// overflow for any representable parameter set.
int permutation_index(int j, const ParameterSet& set);

// Precomputed pi for a whole block. table is always a bijection on [0, n);
// table[0] == 3 mod n since q(0) == 0.
struct PermutationLut {
  int n = 0;
  std::vector<int> table;

  friend bool operator==(const PermutationLut&, const PermutationLut&) = default;
};

// Builds the LUT and verifies bijectivity before returning. NotBijective
// signals a parameter set that slipped past validate.
PermutationLut build_lut(const ParameterSet& set);

// Inverse permutation: compose(lut, invert_lut(lut)) is the identity.
PermutationLut invert_lut(const PermutationLut& lut);

// Serial baseline: gathers each output couplet through the LUT, swapping
// (a, b) when the source index is odd.
CoupletBlock serial_interleave(const CoupletBlock& block,
                               const ParameterSet& set);

// Deterministic scalar-access model of the baseline. Building the LUT costs
// one scalar write per entry; each output couplet costs one LUT read, one
// data read and one data write. No vector lines are involved.
AccessCounters serial_cost(const ParameterSet& set);

}  // namespace rcs2
