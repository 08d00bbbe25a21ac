#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersurf {

enum class Errc {
  InvalidArgument,
  NonSquare,
  NonSymmetric,
  DimensionMismatch,
  NotCoprime,
  DegenerateKnot,
  JumpPoint,
  InvalidRoot,
  DegreeTooSmall,
  NonIntegralDecomposition,
  RankDeficient,
  InvalidCertificate,
  BadBlockShape,
  OddDiagonal,
  OddSize,
  Parse,
};

std::string_view to_string(Errc code);

// Every domain failure in the library is reported through this type; the
// code lets callers (and the CLI) distinguish failure classes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypersurf
