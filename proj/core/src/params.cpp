// SPDX-License-Identifier: Apache-2.0
#include "rcs2/params.hpp"

#include <array>
#include <numeric>
#include <string>

#include "rcs2/error.hpp"

namespace rcs2 {

namespace {

constexpr std::array<ParameterSet, 11> kStandardSets = {{
    {56, 9, 2, 2, 8, 0},
    {152, 17, 9, 5, 14, 1},
    {236, 23, 10, 2, 11, 1},
    {384, 25, 1, 2, 0, 1},
    {432, 29, 1, 4, 1, 1},
    {492, 31, 0, 3, 1, 0},
    {520, 31, 0, 1, 2, 0},
    {776, 39, 7, 0, 0, 0},
    {1056, 43, 0, 0, 6, 2},
    {1192, 49, 0, 3, 5, 0},
    {2396, 81, 1, 2, 5, 2},
}};

}  // namespace

ParamError validate(const ParameterSet& set) noexcept {
  if (set.n <= 0) return ParamError::NonPositiveN;
  if (set.n % 4 != 0) return ParamError::NNotMultipleOf4;
  if (set.p <= 0 || std::gcd(set.p, set.n) != 1)
    return ParamError::PNotCoprimeToN;
  if (set.q0 < 0 || set.q1 < 0 || set.q2 < 0 || set.q3 < 0)
    return ParamError::NegativeQ;
  return ParamError::Ok;
}

const ParameterSet* ParameterRegistry::find(int n) const noexcept {
  for (const ParameterSet& set : entries_) {
    if (set.n == n) return &set;
  }
  return nullptr;
}

const ParameterSet& ParameterRegistry::lookup(int n) const {
  const ParameterSet* set = find(n);
  if (set == nullptr) {
    throw Error(Errc::UnknownSize,
                "no registered parameter set with n = " + std::to_string(n));
  }
  return *set;
}

const ParameterRegistry& standard_registry() noexcept {
  static const ParameterRegistry registry{kStandardSets};
  return registry;
}

}  // namespace rcs2
