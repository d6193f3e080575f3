// SPDX-License-Identifier: Apache-2.0
#include "rcs2/serial.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rcs2/error.hpp"

namespace rcs2 {

int permutation_index(int j, const ParameterSet& set) {
  if (j < 0 || j >= set.n) {
    throw Error(Errc::IndexOutOfRange,
                "j = " + std::to_string(j) + " outside [0, " +
                    std::to_string(set.n) + ")");
  }
  const QSelector q = QSelector::from(set);
  const std::int64_t value = static_cast<std::int64_t>(set.p) * j + q(j) + 3;
  return static_cast<int>(value % set.n);
}

PermutationLut build_lut(const ParameterSet& set) {
  PermutationLut lut;
  lut.n = set.n;
  lut.table.resize(static_cast<std::size_t>(set.n));
  const QSelector q = QSelector::from(set);
  for (int j = 0; j < set.n; ++j) {
    const std::int64_t value = static_cast<std::int64_t>(set.p) * j + q(j) + 3;
    lut.table[static_cast<std::size_t>(j)] = static_cast<int>(value % set.n);
  }

  std::vector<std::uint8_t> seen(static_cast<std::size_t>(set.n), 0);
  for (int index : lut.table) {
    if (index < 0 || index >= set.n || seen[static_cast<std::size_t>(index)]) {
      throw Error(Errc::NotBijective,
                  "parameter set (n = " + std::to_string(set.n) +
                      ", p = " + std::to_string(set.p) +
                      ") does not yield a permutation");
    }
    seen[static_cast<std::size_t>(index)] = 1;
  }
  return lut;
}

PermutationLut invert_lut(const PermutationLut& lut) {
  PermutationLut inverse;
  inverse.n = lut.n;
  inverse.table.resize(lut.table.size());
  for (int j = 0; j < lut.n; ++j) {
    inverse.table[static_cast<std::size_t>(lut.table[static_cast<std::size_t>(j)])] = j;
  }
  return inverse;
}

CoupletBlock serial_interleave(const CoupletBlock& block,
                               const ParameterSet& set) {
  if (block.size() != set.n) {
    throw Error(Errc::LengthMismatch,
                "block holds " + std::to_string(block.size()) +
                    " couplets, parameter set expects " +
                    std::to_string(set.n));
  }
  const PermutationLut lut = build_lut(set);
  CoupletBlock out;
  out.couplets.resize(block.couplets.size());
  for (int j = 0; j < set.n; ++j) {
    const int source = lut.table[static_cast<std::size_t>(j)];
    Couplet c = block.couplets[static_cast<std::size_t>(source)];
    if (source % 2 == 1) std::swap(c.a, c.b);
    out.couplets[static_cast<std::size_t>(j)] = c;
  }
  return out;
}

AccessCounters serial_cost(const ParameterSet& set) {
  const std::uint64_t n = static_cast<std::uint64_t>(set.n);
  AccessCounters counters;
  counters.phase("lut_build").scalar_writes = n;
  OpCounts& interleave = counters.phase("interleave");
  interleave.scalar_reads = 2 * n;  // one LUT read + one data read per couplet
  interleave.scalar_writes = n;
  return counters;
}

}  // namespace rcs2
