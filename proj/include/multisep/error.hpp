#pragma once

#include <stdexcept>
#include <string>

namespace multisep {

enum class Errc {
  ParseError,
  DuplicatePoint,
  ZeroVector,
  LengthMismatch,
  PointNotFound,
  ShapeMismatch,
  BoxTooSmall,
  NotASeparatorDegree,
  DegreeNotAbove,
  NotACM,
  NotCancellable,
  InsufficientCoordinates,
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for every recoverable library failure; the kind is
/// carried in code() so callers (the CLI in particular) can map it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace multisep
