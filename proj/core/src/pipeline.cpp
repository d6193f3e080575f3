// SPDX-License-Identifier: Apache-2.0
#include "rcs2/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rcs2/error.hpp"
#include "rcs2/serial.hpp"

namespace rcs2 {

namespace {

std::int64_t ceil_div(std::int64_t value, std::int64_t divisor) {
  return (value + divisor - 1) / divisor;
}

void require_model(const MachineModel& mm) {
  if (!mm.valid()) throw std::invalid_argument("invalid machine model");
}

void require_vectorizable(const ParameterSet& set) {
  // The row walk relies on a single modular reduction per hop, which holds
  // exactly when the stride fits the block: 4p <= n.
  if (4 * set.p > set.n) {
    throw Error(Errc::InvalidParameterSet,
                "vector pipeline requires 4p <= n (n = " +
                    std::to_string(set.n) + ", p = " + std::to_string(set.p) +
                    ")");
  }
}

}  // namespace

PhaseGeometry phase_geometry(const ParameterSet& set, const MachineModel& mm) {
  require_model(mm);
  PhaseGeometry geo;
  const int stride = 4 * set.p;
  geo.bit_to_word_iterations = ceil_div(set.n, mm.line_dws);
  geo.virtual_rows = static_cast<int>(ceil_div(set.n, stride));
  geo.transpose_passes =
      static_cast<int>(ceil_div(geo.virtual_rows, mm.block_rows));
  geo.transpose_blocks_per_pass = static_cast<int>(ceil_div(stride, mm.line_dws));
  geo.transpose_stuffed_rows_last_block =
      mm.line_dws * geo.transpose_blocks_per_pass - stride;
  geo.ordering_blocks = ceil_div(set.n / 4, mm.line_dws);
  geo.ordering_stuffed_columns =
      static_cast<int>(mm.line_dws * geo.ordering_blocks - set.n / 4);
  geo.word_to_bit_iterations = geo.bit_to_word_iterations;
  return geo;
}

PaddedVector bit_to_word(const std::vector<std::uint8_t>& payload_bits,
                         const MachineModel& mm, AccessCounters* counters) {
  require_model(mm);
  if (payload_bits.size() % 2 != 0) {
    throw Error(Errc::LengthMismatch, "payload bit count must be even");
  }
  PaddedVector pv;
  pv.words.resize(payload_bits.size());
  for (std::size_t t = 0; t < payload_bits.size(); ++t) {
    pv.words[t] = payload_bits[t];  // bit in the LSB, 15 zeros above
  }
  if (counters != nullptr) {
    // One iteration reads one packed chunk and stores one padded line.
    const std::uint64_t iterations = static_cast<std::uint64_t>(
        ceil_div(static_cast<std::int64_t>(payload_bits.size()),
                 2ll * mm.line_dws));
    OpCounts& ops = counters->phase("bit_to_word");
    ops.scalar_reads += iterations;
    ops.line_writes += iterations;
  }
  return pv;
}

TransposedMatrix transpose_phase(const PaddedVector& pv,
                                 const ParameterSet& set,
                                 const MachineModel& mm,
                                 AccessCounters* counters,
                                 const PipelineDebug& debug) {
  require_model(mm);
  require_vectorizable(set);
  if (pv.dw_count() != set.n) {
    throw Error(Errc::LengthMismatch,
                "padded vector holds " + std::to_string(pv.dw_count()) +
                    " DWs, parameter set expects " + std::to_string(set.n));
  }

  const PhaseGeometry geo = phase_geometry(set, mm);
  const int stride = 4 * set.p;
  const int padded_depth = geo.transpose_passes * mm.block_rows;
  TransposedMatrix tm(set.n, set.p, padded_depth);

  const int swap_parity = debug.swap_even_instead ? 0 : 1;
  for (int pass = 0; pass < geo.transpose_passes; ++pass) {
    for (int block = 0; block < geo.transpose_blocks_per_pass; ++block) {
      for (int k = 0; k < mm.block_rows; ++k) {
        const int virtual_row = pass * mm.block_rows + k;
        // Row k of this block starts at source DW line_dws*block + vr*4p.
        for (int t = 0; t < mm.line_dws; ++t) {
          const int virtual_col = block * mm.line_dws + t;
          if (virtual_col >= stride) continue;  // stuffed block column
          const std::int64_t source =
              static_cast<std::int64_t>(virtual_row) * stride + virtual_col;
          if (source < set.n) {
            DoubleWord dw = pv.dw(static_cast<int>(source));
            if ((source & 1) == swap_parity) dw = dw.swapped();
            tm.at(virtual_col, virtual_row) = dw;
          } else {
            tm.at(virtual_col, virtual_row) = debug.stuff_fill;
          }
        }
      }
      if (counters != nullptr) {
        OpCounts& ops = counters->phase("transpose");
        ops.line_reads += static_cast<std::uint64_t>(mm.block_rows);
        ops.line_writes += static_cast<std::uint64_t>(mm.block_rows);
      }
    }
  }
  return tm;
}

ConcatenationPlan compute_plan(const ParameterSet& set) {
  ConcatenationPlan plan;
  plan.n = set.n;
  plan.p = set.p;
  const int stride = 4 * set.p;
  const int rows = static_cast<int>(ceil_div(set.n, stride));
  plan.g = static_cast<int>((static_cast<std::int64_t>(stride) * rows) % set.n);
  for (int k = 0; k < 4; ++k) {
    plan.offsets[static_cast<std::size_t>(k)] = permutation_index(k, set);
    plan.l[static_cast<std::size_t>(k)] =
        plan.offsets[static_cast<std::size_t>(k)] / stride;
  }
  return plan;
}

ResidueVectors concatenate(const TransposedMatrix& tm,
                           const ConcatenationPlan& plan,
                           const ParameterSet& set, const MachineModel& mm,
                           AccessCounters* counters) {
  require_model(mm);
  require_vectorizable(set);
  if (plan.n != set.n || plan.p != set.p || tm.n() != set.n ||
      tm.p() != set.p) {
    throw Error(Errc::PlanMismatch,
                "plan/matrix built for a different parameter set");
  }

  const int stride = 4 * set.p;
  const int quarter = set.n / 4;
  ResidueVectors rv;
  rv.n = set.n;

  OpCounts* ops = counters != nullptr ? &counters->phase("concatenate") : nullptr;
  for (int k = 0; k < 4; ++k) {
    std::vector<DoubleWord>& vec = rv.vectors[static_cast<std::size_t>(k)];
    vec.reserve(static_cast<std::size_t>(quarter));
    int row = plan.offsets[static_cast<std::size_t>(k)] % stride;
    int col = plan.l[static_cast<std::size_t>(k)];
    int remaining = quarter;
    while (remaining > 0) {
      const int available = tm.row_length(row) - col;
      const int take = std::min(available, remaining);
      for (int i = 0; i < take; ++i) {
        vec.push_back(tm.at(row, col + i));
      }
      if (ops != nullptr) {
        const std::uint64_t segment_lines =
            static_cast<std::uint64_t>(ceil_div(take, mm.line_dws));
        ops->line_reads += segment_lines;
        ops->line_writes += segment_lines;
      }
      remaining -= take;
      row = (row + plan.g) % stride;
      col = 0;
    }
  }
  return rv;
}

std::vector<DoubleWord> ordering(const ResidueVectors& rv,
                                 const ParameterSet& set,
                                 const MachineModel& mm,
                                 AccessCounters* counters) {
  require_model(mm);
  const int quarter = set.n / 4;
  if (rv.n != set.n) {
    throw Error(Errc::LengthMismatch,
                "residue vectors built for n = " + std::to_string(rv.n) +
                    ", parameter set expects " + std::to_string(set.n));
  }
  for (const std::vector<DoubleWord>& vec : rv.vectors) {
    if (static_cast<int>(vec.size()) != quarter) {
      throw Error(Errc::LengthMismatch,
                  "residue vector length " + std::to_string(vec.size()) +
                      " != n/4 = " + std::to_string(quarter));
    }
  }

  std::vector<DoubleWord> out(static_cast<std::size_t>(set.n));
  for (int c = 0; c < quarter; ++c) {
    for (int k = 0; k < 4; ++k) {
      out[static_cast<std::size_t>(4 * c + k)] =
          rv.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
    }
  }
  if (counters != nullptr) {
    // One 4 x line_dws block per line_dws columns; stuffed columns in the
    // last block cost the same as real ones and never reach the output.
    const std::uint64_t blocks =
        static_cast<std::uint64_t>(ceil_div(quarter, mm.line_dws));
    OpCounts& ops = counters->phase("ordering");
    ops.line_reads += 4 * blocks;
    ops.line_writes += 4 * blocks;
  }
  return out;
}

std::vector<std::uint8_t> word_to_bit(const PaddedVector& padded,
                                      const MachineModel& mm,
                                      AccessCounters* counters) {
  require_model(mm);
  std::vector<std::uint8_t> bits(padded.words.size());
  for (std::size_t t = 0; t < padded.words.size(); ++t) {
    if (padded.words[t] > 1) {
      throw Error(Errc::CorruptPad,
                  "word " + std::to_string(t) + " holds " +
                      std::to_string(padded.words[t]) +
                      "; padding above the LSB must be zero");
    }
    bits[t] = static_cast<std::uint8_t>(padded.words[t]);
  }
  if (counters != nullptr) {
    const std::uint64_t iterations = static_cast<std::uint64_t>(
        ceil_div(static_cast<std::int64_t>(padded.words.size()),
                 2ll * mm.line_dws));
    OpCounts& ops = counters->phase("word_to_bit");
    ops.line_reads += iterations;
    ops.scalar_writes += iterations;
  }
  return bits;
}

CoupletBlock vector_interleave(const CoupletBlock& block,
                               const ParameterSet& set, const MachineModel& mm,
                               AccessCounters* counters,
                               const PipelineDebug& debug) {
  if (const ParamError err = validate(set); err != ParamError::Ok) {
    throw Error(Errc::InvalidParameterSet, to_string(err));
  }
  if (block.size() != set.n) {
    throw Error(Errc::LengthMismatch,
                "block holds " + std::to_string(block.size()) +
                    " couplets, parameter set expects " +
                    std::to_string(set.n));
  }

  const PaddedVector padded = bit_to_word(block.to_bits(), mm, counters);
  const TransposedMatrix tm =
      transpose_phase(padded, set, mm, counters, debug);
  const ConcatenationPlan plan = compute_plan(set);
  const ResidueVectors rv = concatenate(tm, plan, set, mm, counters);
  const std::vector<DoubleWord> dws = ordering(rv, set, mm, counters);
  const std::vector<std::uint8_t> bits =
      word_to_bit(PaddedVector::from_dws(dws), mm, counters);
  return CoupletBlock::from_bits(bits);
}

}  // namespace rcs2
