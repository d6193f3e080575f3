// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcs2 {

// One load/store tally. A line op moves a full vector line; a scalar op
// moves a single element (bit chunk, word or DW).
struct OpCounts {
  std::uint64_t line_reads = 0;
  std::uint64_t line_writes = 0;
  std::uint64_t scalar_reads = 0;
  std::uint64_t scalar_writes = 0;

  std::uint64_t reads() const noexcept { return line_reads + scalar_reads; }
  std::uint64_t writes() const noexcept { return line_writes + scalar_writes; }
  std::uint64_t total() const noexcept { return reads() + writes(); }
  std::uint64_t line_ops() const noexcept { return line_reads + line_writes; }
  std::uint64_t scalar_ops() const noexcept {
    return scalar_reads + scalar_writes;
  }

  OpCounts& operator+=(const OpCounts& other) noexcept {
    line_reads += other.line_reads;
    line_writes += other.line_writes;
    scalar_reads += other.scalar_reads;
    scalar_writes += other.scalar_writes;
    return *this;
  }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Per-phase access tallies in insertion (pipeline) order. Totals are
// computed on demand, so they always equal the sum over phases.
class AccessCounters {
public:
  // Find-or-insert the named phase tally.
  OpCounts& phase(std::string_view name) {
    for (auto& [phase_name, counts] : phases_) {
      if (phase_name == name) return counts;
    }
    phases_.emplace_back(std::string(name), OpCounts{});
    return phases_.back().second;
  }

  const OpCounts* find(std::string_view name) const noexcept {
    for (const auto& [phase_name, counts] : phases_) {
      if (phase_name == name) return &counts;
    }
    return nullptr;
  }

  const std::vector<std::pair<std::string, OpCounts>>& phases() const noexcept {
    return phases_;
  }

  OpCounts total() const noexcept {
    OpCounts sum;
    for (const auto& [name, counts] : phases_) sum += counts;
    return sum;
  }

  // Element-granular view: one line op touches line_dws elements.
  std::uint64_t reads_touched(int line_dws) const noexcept {
    const OpCounts t = total();
    return t.line_reads * static_cast<std::uint64_t>(line_dws) + t.scalar_reads;
  }
  std::uint64_t writes_touched(int line_dws) const noexcept {
    const OpCounts t = total();
    return t.line_writes * static_cast<std::uint64_t>(line_dws) +
           t.scalar_writes;
  }
  std::uint64_t elements_touched(int line_dws) const noexcept {
    return reads_touched(line_dws) + writes_touched(line_dws);
  }

  friend bool operator==(const AccessCounters&, const AccessCounters&) = default;

private:
  std::vector<std::pair<std::string, OpCounts>> phases_;
};

}  // namespace rcs2
