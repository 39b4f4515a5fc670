#pragma once

#include <stdexcept>
#include <string>

namespace regcl {

enum class ErrorCode {
  GroundTooLarge,
  IndexOutOfRange,
  InvalidSpace,
  BackendFailure,
  InvalidOrthoposet,
  NotTransitive,
  NotAntisymmetric,
  InvalidOrder,
  InvalidLattice,
  TooManyVertices,
  TooManyCuts,
  TooLarge,
  InvalidGraph,
  InvalidSemilattice,
  DimensionMismatch,
  InvalidArrangement,
  ParseError,
  UnknownName,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Result of a predicate whose preconditions may fail; a failed precondition
// yields value == false together with a non-empty diagnostic.
struct Verdict {
  bool value = false;
  std::string diagnostic;

  explicit operator bool() const { return value; }
  static Verdict yes() { return {true, {}}; }
  static Verdict no(std::string why) { return {false, std::move(why)}; }
};

}  // namespace regcl
