// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rcs2/access_counters.hpp"
#include "rcs2/machine_model.hpp"
#include "rcs2/params.hpp"

namespace rcs2 {

// Percentage improvement of l_new over l_old: (l_old - l_new)/l_new * 100,
// signed. Throws DivisionByZero when l_new == 0.
double speedup(std::uint64_t l_old, std::uint64_t l_new);

// Metric definitions (also in the text report header):
//   read/write/op speedups compare memory TRANSACTIONS; a 512-bit line op
//   and a scalar op each count one. The op speedup adds phase_overhead
//   transactions per executed phase as a configurable total-cycles proxy
//   (default 0). The touch speedup compares ELEMENTS MOVED instead: a line
//   op touches line_dws elements, a scalar op one.
struct SpeedupReport {
  int set_n = 0;
  double read_speedup_pct = 0.0;
  double write_speedup_pct = 0.0;
  double op_speedup_pct = 0.0;
  double touch_speedup_pct = 0.0;
};

struct CostComparison {
  ParameterSet set;
  AccessCounters serial;
  AccessCounters vectorized;
  std::uint64_t serial_touches = 0;
  std::uint64_t vector_touches = 0;
  SpeedupReport report;
};

// Runs the serial cost model and a vector pipeline counter collection on a
// deterministic (all-zero) block. Counters are a pure function of
// (set, machine model), so payload content is irrelevant.
CostComparison compare(const ParameterSet& set, const MachineModel& mm,
                       std::uint64_t phase_overhead = 0);

// One comparison per registry entry, in registry (ascending n) order.
std::vector<CostComparison> scaling_table(const ParameterRegistry& registry,
                                          const MachineModel& mm,
                                          std::uint64_t phase_overhead = 0);

// CSV columns: set_n, phase, line_reads, line_writes, scalar_reads,
// scalar_writes, read_speedup_pct, write_speedup_pct, op_speedup_pct.
// By default one row per set (phase = "total") carrying the vector totals
// and the speedups. per_phase additionally emits one row per serial and
// vector phase, with the speedup columns left empty.
void write_scaling_csv(const std::vector<CostComparison>& rows,
                       std::ostream& out, bool per_phase = false);

// Human-readable per-phase breakdown with the metric definitions on top.
void write_scaling_text(const std::vector<CostComparison>& rows,
                        std::ostream& out);

}  // namespace rcs2
