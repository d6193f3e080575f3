// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace rcs2 {

// One DVB-RCS2 interleaver configuration. n is the number of bit couplets
// (the payload carries 2n bits); p and q0..q3 steer the permutation.
struct ParameterSet {
  int n = 0;
  int p = 0;
  int q0 = 0;
  int q1 = 0;
  int q2 = 0;
  int q3 = 0;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

enum class ParamError {
  Ok,
  NonPositiveN,
  NNotMultipleOf4,  // the four residue-class vectors of length n/4 must tile n
  PNotCoprimeToN,   // gcd(p, n) != 1 makes the permutation non-bijective
  NegativeQ,
};

constexpr const char* to_string(ParamError err) noexcept {
  switch (err) {
    case ParamError::Ok: return "Ok";
    case ParamError::NonPositiveN: return "NonPositiveN";
    case ParamError::NNotMultipleOf4: return "NNotMultipleOf4";
    case ParamError::PNotCoprimeToN: return "PNotCoprimeToN";
    case ParamError::NegativeQ: return "NegativeQ";
  }
  return "UnknownError";
}

// Returns Ok iff all ParameterSet invariants hold, otherwise the first
// violated rule in the order above. Non-positive p is reported as
// PNotCoprimeToN: p <= 0 can never satisfy the coprimality requirement
// the way the permutation uses it.
ParamError validate(const ParameterSet& set) noexcept;

// The eleven standard parameter sets, ordered by ascending n.
class ParameterRegistry {
public:
  explicit ParameterRegistry(std::span<const ParameterSet> entries) noexcept
      : entries_(entries) {}

  std::span<const ParameterSet> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const ParameterSet* find(int n) const noexcept;

  // Throws Errc::UnknownSize for an unregistered n.
  const ParameterSet& lookup(int n) const;

private:
  std::span<const ParameterSet> entries_;
};

const ParameterRegistry& standard_registry() noexcept;

}  // namespace rcs2
