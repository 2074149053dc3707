#include "dyckcells/error.hpp"

namespace dyckcells {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::out_of_range: return "OutOfRange";
    case errc::not_weakly_increasing: return "NotWeaklyIncreasing";
    case errc::below_diagonal: return "BelowDiagonal";
    case errc::malformed_word: return "MalformedWord";
    case errc::not_interval_closed: return "NotIntervalClosed";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::improper_coloring: return "ImproperColoring";
    case errc::shape_weight_mismatch: return "ShapeWeightMismatch";
    case errc::weight_mismatch: return "WeightMismatch";
    case errc::too_large: return "TooLarge";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

error::error(errc c, const std::string& witness)
    : std::runtime_error(std::string(errc_name(c)) + ": " + witness), code_(c) {}

void fail(errc c, const std::string& witness) { throw error(c, witness); }

}  // namespace dyckcells
