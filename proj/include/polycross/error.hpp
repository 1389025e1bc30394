#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycross {

enum class Errc {
  DuplicatePoint,
  NonFiniteValue,
  TooFewPoints,
  NotMonotone,
  NotSimple,
  InvalidSubset,
  TooLarge,
  UnreachableState,
  DegenerateWedge,
  ZeroIterations,
  FileNotFound,
  ParseError,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

// Errors that reject user input (as opposed to internal faults).
bool is_input_rejection(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::size_t line = 0);

  Errc code() const noexcept { return code_; }
  // 1-based source line for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace polycross
