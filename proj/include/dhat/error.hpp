#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dhat {

/// Stable error identifiers. The numeric values are part of the CLI report
/// format and must not be renumbered.
enum class ErrorCode : std::uint16_t {
  NonIntegral = 10,
  DivisionByZero = 11,
  MixedAmbient = 20,
  ZeroElement = 21,
  RankMismatch = 30,
  ZeroModule = 40,
  UnsupportedAmbient = 41,
  IndexOutOfRange = 42,
  NotMinimalDimension = 43,
  NotSaturated = 50,
  NotSameModule = 51,
  ConstructionFailed = 52,
  RightModule = 60,
  NotHolonomic = 61,
  NotAComplex = 62,
  ParseError = 70,
  UndeclaredName = 71,
  RingMismatch = 72,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedAmbient: return "MixedAmbient";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::UnsupportedAmbient: return "UnsupportedAmbient";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotMinimalDimension: return "NotMinimalDimension";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotSameModule: return "NotSameModule";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::RightModule: return "RightModule";
    case ErrorCode::NotHolonomic: return "NotHolonomic";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndeclaredName: return "UndeclaredName";
    case ErrorCode::RingMismatch: return "RingMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dhat
