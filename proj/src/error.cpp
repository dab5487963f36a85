#include "multisep/error.hpp"

namespace multisep {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PointNotFound: return "PointNotFound";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::NotASeparatorDegree: return "NotASeparatorDegree";
    case Errc::DegreeNotAbove: return "DegreeNotAbove";
    case Errc::NotACM: return "NotACM";
    case Errc::NotCancellable: return "NotCancellable";
    case Errc::InsufficientCoordinates: return "InsufficientCoordinates";
  }
  return "Unknown";
}

}  // namespace multisep
