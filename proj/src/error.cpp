#include "hypersurf/error.hpp"

namespace hypersurf {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::DegenerateKnot: return "DegenerateKnot";
    case Errc::JumpPoint: return "JumpPoint";
    case Errc::InvalidRoot: return "InvalidRoot";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NonIntegralDecomposition: return "NonIntegralDecomposition";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InvalidCertificate: return "InvalidCertificate";
    case Errc::BadBlockShape: return "BadBlockShape";
    case Errc::OddDiagonal: return "OddDiagonal";
    case Errc::OddSize: return "OddSize";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace hypersurf
