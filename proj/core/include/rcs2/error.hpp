// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rcs2 {

// Failure codes for runtime precondition violations: corrupt files,
// mismatched buffers, parameter sets that cannot drive a bijection.
enum class Errc {
  UnknownSize,
  IndexOutOfRange,
  NotBijective,
  LengthMismatch,
  PlanMismatch,
  CorruptPad,
  DivisionByZero,
  InvalidParameterSet,
  BadMagic,
  BadVersion,
  TruncatedPayload,
  NonZeroTrailingPad,
  NNotMultipleOf4,
  BadCharacter,
  BadLineLength,
  IoFailure,
};

constexpr const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownSize: return "UnknownSize";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotBijective: return "NotBijective";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PlanMismatch: return "PlanMismatch";
    case Errc::CorruptPad: return "CorruptPad";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidParameterSet: return "InvalidParameterSet";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::NonZeroTrailingPad: return "NonZeroTrailingPad";
    case Errc::NNotMultipleOf4: return "NNotMultipleOf4";
    case Errc::BadCharacter: return "BadCharacter";
    case Errc::BadLineLength: return "BadLineLength";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace rcs2
