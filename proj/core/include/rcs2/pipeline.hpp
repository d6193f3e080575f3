// SPDX-License-Identifier: Apache-2.0
#pragma once

//
// Five-phase vectorized permutation:
//
//   bit_to_word      pad every payload bit to a 16-bit word
//   transpose_phase  view the n DWs as a ceil(n/4p) x 4p matrix and
//                    transpose it in 4x16 DW blocks, swapping the words of
//                    odd-indexed source DWs at load time
//   concatenate      walk the transposed rows by precomputed offsets and a
//                    fixed row stride, yielding four residue-class vectors
//   ordering         transpose the four vectors back into one length-n
//                    output sequence
//   word_to_bit      strip the padding
//
// The composition reproduces the serial gather out[j] = in[pi(j)] with the
// odd-source couplet swap, without evaluating pi per element. Every stride
// is constant, so no per-element modulo is computed after plan setup.
//

#include <array>
#include <cstdint>
#include <vector>

#include "rcs2/access_counters.hpp"
#include "rcs2/couplet.hpp"
#include "rcs2/machine_model.hpp"
#include "rcs2/params.hpp"

namespace rcs2 {

// 32-bit unit holding one padded couplet: a in the low word, b in the high.
struct DoubleWord {
  std::uint16_t low = 0;
  std::uint16_t high = 0;

  DoubleWord swapped() const noexcept { return {high, low}; }

  friend bool operator==(const DoubleWord&, const DoubleWord&) = default;
};

// 2n padded words, one payload bit in the LSB of each; word 2s is couplet
// s's a, word 2s+1 its b.
struct PaddedVector {
  std::vector<std::uint16_t> words;

  int dw_count() const noexcept { return static_cast<int>(words.size() / 2); }

  DoubleWord dw(int s) const noexcept {
    return {words[2 * static_cast<std::size_t>(s)],
            words[2 * static_cast<std::size_t>(s) + 1]};
  }

  static PaddedVector from_dws(const std::vector<DoubleWord>& dws) {
    PaddedVector pv;
    pv.words.reserve(dws.size() * 2);
    for (const DoubleWord& dw : dws) {
      pv.words.push_back(dw.low);
      pv.words.push_back(dw.high);
    }
    return pv;
  }
};

// Debug knobs; the defaults leave behaviour untouched.
struct PipelineDebug {
  // Pattern written to stuffed transpose slots. Stuffing must never reach
  // the output, so tests poison it and check the output is unchanged.
  DoubleWord stuff_fill{};
  // Swap couplet words on even instead of odd source indexes. Drives the
  // CLI fault-injection flag that proves verification catches mismatches.
  bool swap_even_instead = false;
};

// The n input DWs rearranged as 4p rows: row r holds sources r, r+4p,
// r+2*4p, ... (< n), words already swapped for odd sources. Row r has
// ceil((n-r)/4p) real entries; columns past that are stuffing.
class TransposedMatrix {
public:
  TransposedMatrix(int n, int p, int padded_depth)
      : n_(n),
        p_(p),
        row_count_(4 * p),
        padded_depth_(padded_depth),
        cells_(static_cast<std::size_t>(row_count_) * padded_depth) {}

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  int row_count() const noexcept { return row_count_; }
  int padded_depth() const noexcept { return padded_depth_; }

  int row_length(int row) const noexcept {
    // ceil((n - row) / 4p); every row has at least one entry when 4p <= n.
    return (n_ - row + row_count_ - 1) / row_count_;
  }

  bool is_stuffed(int row, int col) const noexcept {
    return col >= row_length(row);
  }

  DoubleWord& at(int row, int col) noexcept {
    return cells_[static_cast<std::size_t>(row) * padded_depth_ + col];
  }
  const DoubleWord& at(int row, int col) const noexcept {
    return cells_[static_cast<std::size_t>(row) * padded_depth_ + col];
  }

private:
  int n_;
  int p_;
  int row_count_;
  int padded_depth_;
  std::vector<DoubleWord> cells_;
};

// Offsets, row stride and starting columns steering the concatenation.
//   offsets[k] = pi(k), the source index of output residue class k
//   g          = (4p * ceil(n/4p)) mod n, the row stride between visits
//   l[k]       = floor(offsets[k] / 4p), the starting column of the first row
struct ConcatenationPlan {
  std::array<int, 4> offsets{};
  int g = 0;
  std::array<int, 4> l{};
  int n = 0;  // identity of the set the plan was computed for
  int p = 0;

  friend bool operator==(const ConcatenationPlan&,
                         const ConcatenationPlan&) = default;
};

// Four DW sequences of length n/4; vector k carries the output positions
// congruent to k mod 4, in ascending order.
struct ResidueVectors {
  int n = 0;
  std::array<std::vector<DoubleWord>, 4> vectors;
};

// Iteration, block and stuffing arithmetic of each phase for one
// (set, machine) pair.
struct PhaseGeometry {
  std::int64_t bit_to_word_iterations = 0;   // ceil(n / line_dws)
  int virtual_rows = 0;                      // ceil(n / 4p)
  int transpose_passes = 0;                  // ceil(virtual_rows / block_rows)
  int transpose_blocks_per_pass = 0;         // ceil(4p / line_dws)
  int transpose_stuffed_rows_last_block = 0; // line_dws*blocks_per_pass - 4p
  std::int64_t ordering_blocks = 0;          // ceil((n/4) / line_dws)
  int ordering_stuffed_columns = 0;          // line_dws*blocks - n/4
  std::int64_t word_to_bit_iterations = 0;   // ceil(n / line_dws)
};

PhaseGeometry phase_geometry(const ParameterSet& set, const MachineModel& mm);

// Phase 1: pad each payload bit to one word. One iteration consumes one
// line's worth of packed bits (one scalar read) and stores one padded line.
PaddedVector bit_to_word(const std::vector<std::uint8_t>& payload_bits,
                         const MachineModel& mm,
                         AccessCounters* counters = nullptr);

// Phase 2: block transpose of the virtual 2D matrix with the odd-source
// word swap applied at load. Requires 4p <= n (InvalidParameterSet
// otherwise): taller strides would need a second modular reduction the
// constant-stride row walk cannot express.
TransposedMatrix transpose_phase(const PaddedVector& pv,
                                 const ParameterSet& set,
                                 const MachineModel& mm,
                                 AccessCounters* counters = nullptr,
                                 const PipelineDebug& debug = {});

// Offsets/stride/start-column setup; the only modular arithmetic left.
ConcatenationPlan compute_plan(const ParameterSet& set);

// Phase 3: row concatenation. For each k: start at row offsets[k] mod 4p,
// column l[k]; read to the end of the row's real entries; hop to row
// (row + g) mod 4p, column 0; repeat until n/4 DWs are collected.
ResidueVectors concatenate(const TransposedMatrix& tm,
                           const ConcatenationPlan& plan,
                           const ParameterSet& set, const MachineModel& mm,
                           AccessCounters* counters = nullptr);

// Phase 4: interleaving transpose of the four residue vectors:
// out[j] = vectors[j mod 4][j div 4].
std::vector<DoubleWord> ordering(const ResidueVectors& rv,
                                 const ParameterSet& set,
                                 const MachineModel& mm,
                                 AccessCounters* counters = nullptr);

// Phase 5: strip the padding; exact inverse of bit_to_word. CorruptPad if
// any word has a bit set above the LSB.
std::vector<std::uint8_t> word_to_bit(const PaddedVector& padded,
                                      const MachineModel& mm,
                                      AccessCounters* counters = nullptr);

// The composed pipeline. Output equals serial_interleave(block, set)
// bit for bit; counters (when given) receive one entry per phase.
CoupletBlock vector_interleave(const CoupletBlock& block,
                               const ParameterSet& set, const MachineModel& mm,
                               AccessCounters* counters = nullptr,
                               const PipelineDebug& debug = {});

}  // namespace rcs2
