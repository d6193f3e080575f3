// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rcs2 {

// Memory-transaction geometry of the target vector machine. The pipeline's
// output never depends on these values; only the access counters do.
//
// Words are 16 bits and double-words 32 bits throughout (one padded couplet
// per DW); line_dws and block_rows are the tunable knobs. The default is a
// 512-bit line machine transposing 4x16 DW blocks.
struct MachineModel {
  int word_bits = 16;  // one payload bit padded to one word
  int dw_bits = 32;    // one couplet per double-word
  int line_dws = 16;   // DWs per vector line, the widest transaction
  int block_rows = 4;  // virtual-matrix rows consumed per transpose pass

  int line_bits() const noexcept { return line_dws * dw_bits; }
  int block_cols() const noexcept { return line_dws; }

  // word_bits/dw_bits are fixed by the storage types; line_dws and
  // block_rows must be positive.
  bool valid() const noexcept {
    return word_bits == 16 && dw_bits == 2 * word_bits && line_dws >= 1 &&
           block_rows >= 1;
  }

  static MachineModel with_line_dws(int dws) noexcept {
    MachineModel mm;
    mm.line_dws = dws;
    return mm;
  }

  friend bool operator==(const MachineModel&, const MachineModel&) = default;
};

}  // namespace rcs2
