#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regge {

enum class Errc {
  DivisionByZero,
  IncommensurableSum,
  NotASquare,
  SpanFailure,
  ClosureFailure,
  MultiplicityFailure,
  InvalidTriangle,
  OddPerimeter,
  DegreeMismatch,
  SpaceTooLarge,
  InterlacingViolation,
  NegativeLength,
  NotRealizable,
  EigenvalueMismatch,
  DegenerateTriple,
  NonGeneric,
  InconsistentCoords,
  NotHermitianAdmissible,
  PoleCollision,
  SingularInitialData,
  Undefined,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::IncommensurableSum: return "IncommensurableSum";
    case Errc::NotASquare: return "NotASquare";
    case Errc::SpanFailure: return "SpanFailure";
    case Errc::ClosureFailure: return "ClosureFailure";
    case Errc::MultiplicityFailure: return "MultiplicityFailure";
    case Errc::InvalidTriangle: return "InvalidTriangle";
    case Errc::OddPerimeter: return "OddPerimeter";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::SpaceTooLarge: return "SpaceTooLarge";
    case Errc::InterlacingViolation: return "InterlacingViolation";
    case Errc::NegativeLength: return "NegativeLength";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::EigenvalueMismatch: return "EigenvalueMismatch";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::NonGeneric: return "NonGeneric";
    case Errc::InconsistentCoords: return "InconsistentCoords";
    case Errc::NotHermitianAdmissible: return "NotHermitianAdmissible";
    case Errc::PoleCollision: return "PoleCollision";
    case Errc::SingularInitialData: return "SingularInitialData";
    case Errc::Undefined: return "Undefined";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can branch on the kind of failure rather than the text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace regge
