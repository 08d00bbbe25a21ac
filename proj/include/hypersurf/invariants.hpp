#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hypersurf {

// Closed-form invariants of a degree-d hypersurface V_d ⊂ CP³ and of the
// model manifold M_d sharing its intersection form. Degrees are limited to
// [1, kMaxDegree] so every quantity fits comfortably in a long.

inline constexpr long kMaxDegree = 100000;

enum class Parity { Even, Odd };
std::string to_string(Parity p);

struct HypersurfaceInvariants {
  long b2 = 0;
  long sigma = 0;
  Parity parity = Parity::Odd;
};

/// b2 = d³ − 4d² + 6d − 2, σ = −d(d² − 4)/3, even iff d even.
HypersurfaceInvariants hypersurface_invariants(long d);

/// Summand counts of M_d: S²×S² plus CP̄² (odd d) or K3 (even d).
struct ModelDecomposition {
  long s2s2_count = 0;
  long cp2bar_count = 0;
  long k3_count = 0;
  friend bool operator==(const ModelDecomposition&, const ModelDecomposition&) = default;
};

/// Throws InvalidArgument for d < 2, NonIntegralDecomposition if a count
/// would not be an integer.
ModelDecomposition model_decomposition(long d);

/// Number of literal S²×S² summands of M_d.
long h_count(long d);

/// Smallest b2 allowed for a manifold in the class of V_d: the signature is
/// fixed, b2⁺ ≥ 1, and for spin classes with σ ≠ 0 the 10/8 bound.
long feasibility_floor(long d);

struct FeasibilityVerdict {
  long d = 0;
  long b2 = 0;
  long floor = 0;
  bool feasible = false;
  std::string verdict;
};
FeasibilityVerdict check_feasibility(long d, long b2);

struct IntInterval {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// Published block ranks r_d for d = 5..9 (ranges where only bounds are known).
std::optional<IntInterval> known_block_rank(long d);

/// b2(V_d) − 2·min(r·(d−1), h_d). Throws DegreeTooSmall for d < 5 and
/// InvalidArgument for r < 1.
long surgery_budget(long d, long r);

struct DegreeReport {
  long d = 0;
  long b2 = 0;
  long sigma = 0;
  Parity parity = Parity::Odd;
  long b2_fiber = 0;
  std::optional<long> h_d;               // d >= 2
  std::optional<IntInterval> r_d;        // d in 5..9
  std::optional<IntInterval> r_hat_d;
  long b2_reduced = 0;                   // uses the lower endpoint of r̂_d
  long feasibility_floor = 0;
};

DegreeReport degree_report(long d);

/// Fixed column order of the CSV and JSON renderings.
const std::vector<std::string>& report_columns();
std::string report_csv_header();
std::string to_csv_row(const DegreeReport& r);
nlohmann::json to_json(const DegreeReport& r);

struct AsymptoticRow {
  long d = 0;
  long r_d = 0;           // lower endpoint, or ⌊d²/8⌋ past the table
  long b2_reduced = 0;
  double reduced_ratio = 0;   // b2_reduced / d³
  double removed_ratio = 0;   // 2·min(r̂, h_d) / d³
  bool extrapolated = false;
};

/// Rows for d = 5..d_max. Throws InvalidArgument for d_max < 5.
std::vector<AsymptoticRow> asymptotic_report(long d_max);

}  // namespace hypersurf
