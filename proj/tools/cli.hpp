// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcs2::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
// 3 I/O or file-format error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rcs2::cli
