// SPDX-License-Identifier: Apache-2.0
#include "rcs2/metrics.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "rcs2/couplet.hpp"
#include "rcs2/error.hpp"
#include "rcs2/pipeline.hpp"
#include "rcs2/serial.hpp"

namespace rcs2 {

namespace {

std::string format_pct(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

void write_counter_row(std::ostream& out, int set_n, const std::string& phase,
                       const OpCounts& ops, const std::string& read_pct,
                       const std::string& write_pct,
                       const std::string& op_pct) {
  out << set_n << ',' << phase << ',' << ops.line_reads << ','
      << ops.line_writes << ',' << ops.scalar_reads << ',' << ops.scalar_writes
      << ',' << read_pct << ',' << write_pct << ',' << op_pct << '\n';
}

}  // namespace

double speedup(std::uint64_t l_old, std::uint64_t l_new) {
  if (l_new == 0) {
    throw Error(Errc::DivisionByZero, "speedup undefined for l_new = 0");
  }
  return (static_cast<double>(l_old) - static_cast<double>(l_new)) /
         static_cast<double>(l_new) * 100.0;
}

CostComparison compare(const ParameterSet& set, const MachineModel& mm,
                       std::uint64_t phase_overhead) {
  CostComparison cmp;
  cmp.set = set;
  cmp.serial = serial_cost(set);

  CoupletBlock zero_block;
  zero_block.couplets.resize(static_cast<std::size_t>(set.n));
  vector_interleave(zero_block, set, mm, &cmp.vectorized);

  const OpCounts serial_total = cmp.serial.total();
  const OpCounts vector_total = cmp.vectorized.total();
  cmp.serial_touches = cmp.serial.elements_touched(mm.line_dws);
  cmp.vector_touches = cmp.vectorized.elements_touched(mm.line_dws);

  const std::uint64_t serial_proxy =
      serial_total.total() + phase_overhead * cmp.serial.phases().size();
  const std::uint64_t vector_proxy =
      vector_total.total() + phase_overhead * cmp.vectorized.phases().size();

  cmp.report.set_n = set.n;
  cmp.report.read_speedup_pct =
      speedup(serial_total.reads(), vector_total.reads());
  cmp.report.write_speedup_pct =
      speedup(serial_total.writes(), vector_total.writes());
  cmp.report.op_speedup_pct = speedup(serial_proxy, vector_proxy);
  cmp.report.touch_speedup_pct = speedup(cmp.serial_touches, cmp.vector_touches);
  return cmp;
}

std::vector<CostComparison> scaling_table(const ParameterRegistry& registry,
                                          const MachineModel& mm,
                                          std::uint64_t phase_overhead) {
  std::vector<CostComparison> rows;
  rows.reserve(registry.size());
  for (const ParameterSet& set : registry.entries()) {
    rows.push_back(compare(set, mm, phase_overhead));
  }
  return rows;
}

void write_scaling_csv(const std::vector<CostComparison>& rows,
                       std::ostream& out, bool per_phase) {
  out << "set_n,phase,line_reads,line_writes,scalar_reads,scalar_writes,"
         "read_speedup_pct,write_speedup_pct,op_speedup_pct\n";
  for (const CostComparison& cmp : rows) {
    if (per_phase) {
      for (const auto& [name, ops] : cmp.serial.phases()) {
        write_counter_row(out, cmp.set.n, "serial:" + name, ops, "", "", "");
      }
      for (const auto& [name, ops] : cmp.vectorized.phases()) {
        write_counter_row(out, cmp.set.n, "vector:" + name, ops, "", "", "");
      }
    }
    write_counter_row(out, cmp.set.n, "total", cmp.vectorized.total(),
                      format_pct(cmp.report.read_speedup_pct),
                      format_pct(cmp.report.write_speedup_pct),
                      format_pct(cmp.report.op_speedup_pct));
  }
}

void write_scaling_text(const std::vector<CostComparison>& rows,
                        std::ostream& out) {
  out << "# Access-count comparison, serial baseline vs vector pipeline.\n"
         "# Transaction metrics count each line or scalar load/store as one\n"
         "# operation; touch metrics count elements moved (one line op\n"
         "# touches line_dws elements). Speedup = (old - new)/new * 100%.\n";
  for (const CostComparison& cmp : rows) {
    out << "\nn = " << cmp.set.n << "\n";
    auto print_phases = [&out](const char* label, const AccessCounters& ac) {
      out << "  " << label << "\n";
      for (const auto& [name, ops] : ac.phases()) {
        out << "    " << name << ": line R/W " << ops.line_reads << "/"
            << ops.line_writes << ", scalar R/W " << ops.scalar_reads << "/"
            << ops.scalar_writes << "\n";
      }
      const OpCounts t = ac.total();
      out << "    total: line R/W " << t.line_reads << "/" << t.line_writes
          << ", scalar R/W " << t.scalar_reads << "/" << t.scalar_writes
          << ", ops " << t.total() << "\n";
    };
    print_phases("serial", cmp.serial);
    print_phases("vector", cmp.vectorized);
    out << "  touches: serial " << cmp.serial_touches << ", vector "
        << cmp.vector_touches << "\n";
    out << "  speedup%: read " << format_pct(cmp.report.read_speedup_pct)
        << ", write " << format_pct(cmp.report.write_speedup_pct) << ", ops "
        << format_pct(cmp.report.op_speedup_pct) << ", touches "
        << format_pct(cmp.report.touch_speedup_pct) << "\n";
  }
}

}  // namespace rcs2
