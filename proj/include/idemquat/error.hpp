#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idemquat {

enum class Errc {
  NotPrime,
  InvalidModulus,
  InvalidSpec,
  ParseError,
  NotAUnit,
  TwoNotInvertible,
  NotInvertible,
  TrivialIdempotent,
  NotIdempotent,
  NotUnimodular,
  NonIntegralStabilizer,
  NonIntegralFormula,
  CapExceeded,
  VerificationFailed,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::ParseError: return "ParseError";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::TwoNotInvertible: return "TwoNotInvertible";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::TrivialIdempotent: return "TrivialIdempotent";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NonIntegralStabilizer: return "NonIntegralStabilizer";
    case Errc::NonIntegralFormula: return "NonIntegralFormula";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace idemquat
