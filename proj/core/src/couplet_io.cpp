// SPDX-License-Identifier: Apache-2.0
#include "rcs2/couplet_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rcs2/error.hpp"

namespace rcs2 {

namespace {

std::size_t payload_bytes(int n) {
  return (2 * static_cast<std::size_t>(n) + 7) / 8;
}

}  // namespace

CoupletBlock read_couplets(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4)) {
    throw Error(Errc::TruncatedPayload, "stream ends inside the header");
  }
  if (!std::equal(magic, magic + 4, kCoupletMagic)) {
    throw Error(Errc::BadMagic, "expected magic \"RCS2\"");
  }
  char version = 0;
  if (!in.read(&version, 1)) {
    throw Error(Errc::TruncatedPayload, "stream ends inside the header");
  }
  if (static_cast<unsigned char>(version) != kCoupletFormatVersion) {
    throw Error(Errc::BadVersion,
                "unsupported format version " +
                    std::to_string(static_cast<int>(version)));
  }
  unsigned char n_bytes[4];
  if (!in.read(reinterpret_cast<char*>(n_bytes), 4)) {
    throw Error(Errc::TruncatedPayload, "stream ends inside the header");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(n_bytes[0]) |
                          (static_cast<std::uint32_t>(n_bytes[1]) << 8) |
                          (static_cast<std::uint32_t>(n_bytes[2]) << 16) |
                          (static_cast<std::uint32_t>(n_bytes[3]) << 24);
  if (n % 4 != 0) {
    throw Error(Errc::NNotMultipleOf4,
                "couplet count " + std::to_string(n) + " is not a multiple of 4");
  }

  std::vector<char> payload(payload_bytes(static_cast<int>(n)));
  if (!payload.empty() &&
      !in.read(payload.data(), static_cast<std::streamsize>(payload.size()))) {
    throw Error(Errc::TruncatedPayload,
                "payload shorter than " + std::to_string(payload.size()) +
                    " bytes");
  }

  CoupletBlock block;
  block.couplets.resize(n);
  for (std::uint32_t t = 0; t < 2 * n; ++t) {
    const unsigned char byte = static_cast<unsigned char>(payload[t >> 3]);
    const std::uint8_t bit = (byte >> (t & 7)) & 1;
    Couplet& c = block.couplets[t / 2];
    if (t % 2 == 0) {
      c.a = bit;
    } else {
      c.b = bit;
    }
  }
  // Pad bits beyond position 2n in the last byte must be zero.
  if (2 * n % 8 != 0 && !payload.empty()) {
    const unsigned char last = static_cast<unsigned char>(payload.back());
    const unsigned used = 2 * n % 8;
    if ((last >> used) != 0) {
      throw Error(Errc::NonZeroTrailingPad,
                  "pad bits in the final payload byte are not zero");
    }
  }
  return block;
}

CoupletBlock read_couplets_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::IoFailure, "cannot open " + path + " for reading");
  }
  return read_couplets(in);
}

std::size_t write_couplets(const CoupletBlock& block, std::ostream& out) {
  const int n = block.size();
  if (n % 4 != 0) {
    throw Error(Errc::NNotMultipleOf4,
                "couplet count " + std::to_string(n) + " is not a multiple of 4");
  }
  std::vector<char> bytes(kCoupletHeaderBytes + payload_bytes(n), 0);
  bytes[0] = kCoupletMagic[0];
  bytes[1] = kCoupletMagic[1];
  bytes[2] = kCoupletMagic[2];
  bytes[3] = kCoupletMagic[3];
  bytes[4] = static_cast<char>(kCoupletFormatVersion);
  const std::uint32_t un = static_cast<std::uint32_t>(n);
  bytes[5] = static_cast<char>(un & 0xff);
  bytes[6] = static_cast<char>((un >> 8) & 0xff);
  bytes[7] = static_cast<char>((un >> 16) & 0xff);
  bytes[8] = static_cast<char>((un >> 24) & 0xff);

  for (int t = 0; t < 2 * n; ++t) {
    const Couplet& c = block.couplets[static_cast<std::size_t>(t / 2)];
    const std::uint8_t bit = (t % 2 == 0) ? c.a : c.b;
    if (bit) {
      bytes[kCoupletHeaderBytes + static_cast<std::size_t>(t >> 3)] |=
          static_cast<char>(1u << (t & 7));
    }
  }

  if (!out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw Error(Errc::IoFailure, "write failed");
  }
  return bytes.size();
}

std::size_t write_couplets_file(const CoupletBlock& block,
                                const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::IoFailure, "cannot open " + path + " for writing");
  }
  const std::size_t written = write_couplets(block, out);
  out.flush();
  if (!out) {
    throw Error(Errc::IoFailure, "write to " + path + " failed");
  }
  return written;
}

CoupletBlock read_couplets_text(std::istream& in) {
  CoupletBlock block;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != 3 || line[1] != ' ') {
      throw Error(Errc::BadLineLength,
                  "line " + std::to_string(line_no) +
                      " is not two bit characters separated by a space");
    }
    const char a = line[0];
    const char b = line[2];
    if ((a != '0' && a != '1') || (b != '0' && b != '1')) {
      throw Error(Errc::BadCharacter,
                  "line " + std::to_string(line_no) +
                      " holds characters other than '0'/'1'");
    }
    block.couplets.push_back(Couplet{static_cast<std::uint8_t>(a - '0'),
                                     static_cast<std::uint8_t>(b - '0')});
  }
  return block;
}

void write_couplets_text(const CoupletBlock& block, std::ostream& out) {
  for (const Couplet& c : block.couplets) {
    out << static_cast<char>('0' + c.a) << ' ' << static_cast<char>('0' + c.b)
        << '\n';
  }
  if (!out) {
    throw Error(Errc::IoFailure, "write failed");
  }
}

}  // namespace rcs2
