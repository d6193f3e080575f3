// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits non-zero if any criterion fails.
//
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rcs2/couplet_io.hpp"
#include "rcs2/metrics.hpp"
#include "rcs2/params.hpp"
#include "rcs2/pipeline.hpp"
#include "rcs2/random.hpp"
#include "rcs2/serial.hpp"

using namespace rcs2;

namespace {

int failures = 0;

void report(int criterion, bool passed, const std::string& description,
            const std::string& detail = "") {
  std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << criterion
            << ": " << description;
  if (!passed && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!passed) ++failures;
}

// 1. 100 seeded random blocks per registry set: vector == serial, exact.
void criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool passed = true;
  const MachineModel mm;
  for (const ParameterSet& set : standard_registry().entries()) {
    for (std::uint32_t trial = 0; trial < 100 && passed; ++trial) {
      const CoupletBlock block =
          random_block(set.n, block_seed(0, set.n, trial));
      if (vector_interleave(block, set, mm) != serial_interleave(block, set)) {
        passed = false;
        detail = "n = " + std::to_string(set.n) + ", trial " +
                 std::to_string(trial);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 30.0) {
    passed = false;
    detail += " runtime " + std::to_string(seconds) + "s >= 30s";
  }
  report(1, passed,
         "vector pipeline equals serial baseline on 11 x 100 seeded blocks",
         detail);
}

// 2. build_lut yields a permutation for all registry sets, exact.
void criterion_bijectivity() {
  bool passed = true;
  std::string detail;
  for (const ParameterSet& set : standard_registry().entries()) {
    std::vector<int> sorted = build_lut(set).table;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(static_cast<std::size_t>(set.n));
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity) {
      passed = false;
      detail = "n = " + std::to_string(set.n);
      break;
    }
  }
  report(2, passed, "build_lut is a bijection for all 11 sets", detail);
}

// 3. Worked n=776 plan: offsets (3, 42, 397, 436), g = 4, l = (0, 0, 2, 2).
void criterion_worked_plan() {
  const ConcatenationPlan plan =
      compute_plan(standard_registry().lookup(776));
  const bool passed = plan.offsets == std::array<int, 4>{3, 42, 397, 436} &&
                      plan.g == 4 && plan.l == std::array<int, 4>{0, 0, 2, 2};
  std::ostringstream detail;
  detail << "got offsets (" << plan.offsets[0] << ", " << plan.offsets[1]
         << ", " << plan.offsets[2] << ", " << plan.offsets[3] << "), g = "
         << plan.g;
  report(3, passed, "n=776 plan matches the worked example",
         passed ? "" : detail.str());
}

// 4. pi(j+4) - pi(j) = 4p (mod n) for all sets and all j in [0, n-4).
void criterion_stride_property() {
  bool passed = true;
  std::string detail;
  for (const ParameterSet& set : standard_registry().entries()) {
    const PermutationLut lut = build_lut(set);
    const int stride = (4 * set.p) % set.n;
    for (int j = 0; j + 4 < set.n; ++j) {
      const int delta = (lut.table[static_cast<std::size_t>(j + 4)] -
                         lut.table[static_cast<std::size_t>(j)] + set.n) %
                        set.n;
      if (delta != stride) {
        passed = false;
        detail = "n = " + std::to_string(set.n) + ", j = " + std::to_string(j);
        break;
      }
    }
    if (!passed) break;
  }
  report(4, passed, "constant 4p stride between pi(j) and pi(j+4)", detail);
}

// 5. Phase arithmetic for n=776/p=39: 10 transpose blocks per pass with 4
//    stuffed rows, 13 ordering blocks with 14 stuffed columns, 49
//    bit-to-word iterations.
void criterion_phase_arithmetic() {
  const PhaseGeometry geo =
      phase_geometry(standard_registry().lookup(776), MachineModel{});
  const bool passed =
      geo.transpose_blocks_per_pass == 10 &&
      geo.transpose_stuffed_rows_last_block == 4 && geo.ordering_blocks == 13 &&
      geo.ordering_stuffed_columns == 14 && geo.bit_to_word_iterations == 49;
  std::ostringstream detail;
  detail << "blocks/pass " << geo.transpose_blocks_per_pass << ", stuffed rows "
         << geo.transpose_stuffed_rows_last_block << ", ordering blocks "
         << geo.ordering_blocks << ", stuffed columns "
         << geo.ordering_stuffed_columns << ", iterations "
         << geo.bit_to_word_iterations;
  report(5, passed, "n=776 phase arithmetic", passed ? "" : detail.str());
}

// 6. Padding, binary-file and text-file round trips are the identity on
//    1000 seeded random blocks.
void criterion_round_trips() {
  bool passed = true;
  std::string detail;
  const auto entries = standard_registry().entries();
  const MachineModel mm;
  for (std::uint32_t trial = 0; trial < 1000 && passed; ++trial) {
    const ParameterSet& set = entries[trial % entries.size()];
    const CoupletBlock block = random_block(set.n, block_seed(1, set.n, trial));

    const std::vector<std::uint8_t> bits = block.to_bits();
    if (word_to_bit(bit_to_word(bits, mm), mm) != bits) {
      passed = false;
      detail = "padding round trip, trial " + std::to_string(trial);
      break;
    }

    std::stringstream binary;
    write_couplets(block, binary);
    if (read_couplets(binary) != block) {
      passed = false;
      detail = "binary round trip, trial " + std::to_string(trial);
      break;
    }

    std::stringstream text;
    write_couplets_text(block, text);
    if (read_couplets_text(text) != block) {
      passed = false;
      detail = "text round trip, trial " + std::to_string(trial);
      break;
    }
  }
  report(6, passed, "padding/binary/text round trips on 1000 seeded blocks",
         detail);
}

// 7. Vector line-op totals undercut serial scalar-op totals for every set,
//    and grow more slowly from n=56 to n=2396.
void criterion_cost_ordering() {
  bool passed = true;
  std::string detail;
  const MachineModel mm;
  for (const ParameterSet& set : standard_registry().entries()) {
    const CostComparison cmp = compare(set, mm);
    if (cmp.vectorized.total().line_ops() >= cmp.serial.total().scalar_ops()) {
      passed = false;
      detail = "n = " + std::to_string(set.n);
      break;
    }
  }
  if (passed) {
    const CostComparison small = compare(standard_registry().lookup(56), mm);
    const CostComparison large = compare(standard_registry().lookup(2396), mm);
    const double vector_ratio =
        static_cast<double>(large.vectorized.total().line_ops()) /
        static_cast<double>(small.vectorized.total().line_ops());
    const double serial_ratio =
        static_cast<double>(large.serial.total().scalar_ops()) /
        static_cast<double>(small.serial.total().scalar_ops());
    if (!(vector_ratio < serial_ratio)) {
      passed = false;
      std::ostringstream ratios;
      ratios << "vector ratio " << vector_ratio << " vs serial " << serial_ratio;
      detail = ratios.str();
    }
  }
  report(7, passed,
         "vector line ops < serial scalar ops, with sub-linear scaling",
         detail);
}

// 8. The speedup formula reproduces 11.7% +/- 0.1 from the back-derived
//    (850, 761) read-count pair.
void criterion_speedup_anchor() {
  const double value = speedup(850, 761);
  const bool passed = std::abs(value - 11.7) <= 0.1;
  report(8, passed, "speedup(850, 761) = 11.7% +/- 0.1",
         passed ? "" : "got " + std::to_string(value));
}

// 9. Two `bench --all` runs produce byte-identical CSV.
void criterion_bench_determinism() {
  std::ostringstream out1, err1, out2, err2;
  const int code1 = cli::run({"bench", "--all"}, out1, err1);
  const int code2 = cli::run({"bench", "--all"}, out2, err2);
  const bool passed =
      code1 == 0 && code2 == 0 && out1.str() == out2.str() && !out1.str().empty();
  report(9, passed, "bench --all is byte-identical across runs",
         passed ? "" : "exit codes " + std::to_string(code1) + "/" +
                           std::to_string(code2));
}

}  // namespace

int main() {
  criterion_oracle_equivalence();
  criterion_bijectivity();
  criterion_worked_plan();
  criterion_stride_property();
  criterion_phase_arithmetic();
  criterion_round_trips();
  criterion_cost_ordering();
  criterion_speedup_anchor();
  criterion_bench_determinism();

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
