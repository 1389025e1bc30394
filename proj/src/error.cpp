#include "polycross/error.hpp"

namespace polycross {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NotSimple: return "NotSimple";
    case Errc::InvalidSubset: return "InvalidSubset";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnreachableState: return "UnreachableState";
    case Errc::DegenerateWedge: return "DegenerateWedge";
    case Errc::ZeroIterations: return "ZeroIterations";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_rejection(Errc code) noexcept {
  return code != Errc::Internal && code != Errc::UnreachableState;
}

Error::Error(Errc code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      line_(line) {}

}  // namespace polycross
