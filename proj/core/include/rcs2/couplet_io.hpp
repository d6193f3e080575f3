// SPDX-License-Identifier: Apache-2.0
#pragma once

//
// Binary container (.rcs2), independent of host byte order:
//
//   bytes 0..3   magic "RCS2"
//   byte  4      format version, currently 1
//   bytes 5..8   couplet count n, unsigned 32-bit little-endian; n mod 4 == 0
//   then ceil(2n/8) payload bytes
//
// Flat bit t (order a0, b0, a1, b1, ...) lives in payload byte t>>3 at bit
// position t&7, LSB first. Pad bits in the final byte must be zero. Bytes
// past the payload are ignored.
//
// Text form: one line per couplet, two characters '0'/'1' separated by a
// single space.
//

#include <cstddef>
#include <iosfwd>
#include <string>

#include "rcs2/couplet.hpp"

namespace rcs2 {

inline constexpr char kCoupletMagic[4] = {'R', 'C', 'S', '2'};
inline constexpr unsigned char kCoupletFormatVersion = 1;
inline constexpr std::size_t kCoupletHeaderBytes = 9;

CoupletBlock read_couplets(std::istream& in);
CoupletBlock read_couplets_file(const std::string& path);

// Returns the number of bytes emitted (header + payload).
std::size_t write_couplets(const CoupletBlock& block, std::ostream& out);
std::size_t write_couplets_file(const CoupletBlock& block,
                                const std::string& path);

CoupletBlock read_couplets_text(std::istream& in);
void write_couplets_text(const CoupletBlock& block, std::ostream& out);

}  // namespace rcs2
