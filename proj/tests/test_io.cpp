// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rcs2/couplet_io.hpp"
#include "rcs2/error.hpp"
#include "rcs2/random.hpp"

using namespace rcs2;

namespace {

std::string binary_n4_example() {
  // header n=4 followed by payload byte 0b00000110: bits 1 and 2 set, so
  // b0 = 1 and a1 = 1.
  return std::string("RCS2\x01\x04\x00\x00\x00\x06", 10);
}

CoupletBlock n4_block() {
  CoupletBlock block;
  block.couplets = {{0, 1}, {1, 0}, {0, 0}, {0, 0}};
  return block;
}

}  // namespace

TEST_CASE("binary reader decodes the documented example") {
  std::istringstream in(binary_n4_example());
  CHECK(read_couplets(in) == n4_block());
}

TEST_CASE("binary writer emits header plus LSB-first payload") {
  std::ostringstream out;
  const std::size_t written = write_couplets(n4_block(), out);
  CHECK(written == 10);  // 9-byte header + 1 payload byte
  CHECK(out.str() == binary_n4_example());

  std::ostringstream out56;
  CHECK(write_couplets(random_block(56, 3), out56) == 9 + 14);
}

TEST_CASE("binary reader rejects malformed streams") {
  SUBCASE("bad magic") {
    std::istringstream in(std::string("RCSX\x01\x04\x00\x00\x00\x06", 10));
    CHECK(oracles::throws_code([&] { read_couplets(in); }, Errc::BadMagic));
  }
  SUBCASE("bad version") {
    std::istringstream in(std::string("RCS2\x02\x04\x00\x00\x00\x06", 10));
    CHECK(oracles::throws_code([&] { read_couplets(in); }, Errc::BadVersion));
  }
  SUBCASE("truncated header") {
    std::istringstream in(std::string("RCS2\x01\x04", 6));
    CHECK(oracles::throws_code([&] { read_couplets(in); },
                               Errc::TruncatedPayload));
  }
  SUBCASE("truncated payload") {
    std::istringstream in(std::string("RCS2\x01\x08\x00\x00\x00\x06", 10));
    CHECK(oracles::throws_code([&] { read_couplets(in); },
                               Errc::TruncatedPayload));
  }
  SUBCASE("n not a multiple of 4") {
    std::istringstream in(std::string("RCS2\x01\x06\x00\x00\x00\x00\x00", 11));
    CHECK(oracles::throws_code([&] { read_couplets(in); },
                               Errc::NNotMultipleOf4));
  }
}

TEST_CASE("binary round trip is the identity") {
  for (int n : {4, 56, 776}) {
    const CoupletBlock block = random_block(n, block_seed(11, n, 0));
    std::stringstream stream;
    write_couplets(block, stream);
    CHECK(read_couplets(stream) == block);
  }
}

TEST_CASE("writer rejects sizes that are not multiples of 4") {
  CoupletBlock block;
  block.couplets.resize(6);
  std::ostringstream out;
  CHECK(oracles::throws_code([&] { write_couplets(block, out); },
                             Errc::NNotMultipleOf4));
}

TEST_CASE("text form") {
  SUBCASE("one line per couplet") {
    CoupletBlock block;
    block.couplets = {{1, 0}};
    std::ostringstream out;
    write_couplets_text(block, out);
    CHECK(out.str() == "1 0\n");
  }
  SUBCASE("bad character") {
    std::istringstream in("2 0\n");
    CHECK(oracles::throws_code([&] { read_couplets_text(in); },
                               Errc::BadCharacter));
  }
  SUBCASE("bad line shape") {
    std::istringstream in("1  0\n");
    CHECK(oracles::throws_code([&] { read_couplets_text(in); },
                               Errc::BadLineLength));
    std::istringstream in2("10\n");
    CHECK(oracles::throws_code([&] { read_couplets_text(in2); },
                               Errc::BadLineLength));
  }
  SUBCASE("round trip is the identity") {
    const CoupletBlock block = random_block(152, 9);
    std::stringstream stream;
    write_couplets_text(block, stream);
    CHECK(read_couplets_text(stream) == block);
  }
}

TEST_CASE("file helpers surface IoFailure") {
  CHECK(oracles::throws_code(
      [] { read_couplets_file("/nonexistent/path/block.rcs2"); },
      Errc::IoFailure));
  CHECK(oracles::throws_code(
      [] { write_couplets_file(CoupletBlock{}, "/nonexistent/path/out.rcs2"); },
      Errc::IoFailure));
}
