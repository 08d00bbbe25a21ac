#include "hypersurf/invariants.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {

void require_range(long d, long min_degree) {
  if (d < min_degree || d > kMaxDegree)
    throw Error(Errc::InvalidArgument,
                "degree must lie in [" + std::to_string(min_degree) + ", " + std::to_string(kMaxDegree) + "], got " +
                    std::to_string(d));
}

long ceil_div(long num, long den) { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }

}  // namespace

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

HypersurfaceInvariants hypersurface_invariants(long d) {
  require_range(d, 1);
  HypersurfaceInvariants inv;
  inv.b2 = d * d * d - 4 * d * d + 6 * d - 2;
  inv.sigma = -d * (d * d - 4) / 3;  // d(d²−4) = (d−2)d(d+2) is divisible by 3
  inv.parity = d % 2 == 0 ? Parity::Even : Parity::Odd;
  return inv;
}

ModelDecomposition model_decomposition(long d) {
  require_range(d, 2);
  const auto [b2, sigma, parity] = hypersurface_invariants(d);
  const long abs_sigma = sigma < 0 ? -sigma : sigma;
  ModelDecomposition m;
  if (parity == Parity::Odd) {
    if ((b2 + sigma) % 2 != 0) throw Error(Errc::NonIntegralDecomposition, "(b2 + σ)/2 is not an integer");
    m.s2s2_count = (b2 + sigma) / 2;
    m.cp2bar_count = abs_sigma;
  } else {
    if ((8 * b2 + 11 * sigma) % 16 != 0 || abs_sigma % 16 != 0)
      throw Error(Errc::NonIntegralDecomposition, "even-degree model counts are not integers");
    m.s2s2_count = (8 * b2 + 11 * sigma) / 16;
    m.k3_count = abs_sigma / 16;
  }
  if (m.s2s2_count < 0) throw Error(Errc::NonIntegralDecomposition, "negative S²×S² count");
  return m;
}

long h_count(long d) { return model_decomposition(d).s2s2_count; }

namespace {

struct Floor {
  long value;
  const char* reason;
};

Floor compute_floor(long d) {
  const auto [b2, sigma, parity] = hypersurface_invariants(d);
  // b2 = 2·b2⁻ + σ with b2⁻ ≥ 0 and b2⁺ = b2⁻ + σ ≥ 1.
  Floor f{sigma >= 1 ? sigma : 2 - sigma, "b2+ >= 1"};
  if (parity == Parity::Even && sigma != 0) {
    const long abs_sigma = sigma < 0 ? -sigma : sigma;
    long furuta = ceil_div(10 * abs_sigma, 8) + 2;
    if ((furuta - sigma) % 2 != 0) ++furuta;
    if (furuta > f.value) f = {furuta, "10/8"};
  }
  return f;
}

}  // namespace

long feasibility_floor(long d) { return compute_floor(d).value; }

FeasibilityVerdict check_feasibility(long d, long b2) {
  const Floor f = compute_floor(d);
  const long sigma = hypersurface_invariants(d).sigma;
  FeasibilityVerdict v{d, b2, f.value, false, {}};
  if (b2 < f.value) {
    v.verdict = "infeasible (" + std::string(f.reason) + " floor " + std::to_string(f.value) + ")";
  } else if ((b2 - sigma) % 2 != 0) {
    v.verdict = std::string("infeasible (parity: b2 must be ") + (sigma % 2 == 0 ? "even" : "odd") + ")";
  } else {
    v.feasible = true;
    v.verdict = "feasible";
  }
  return v;
}

std::optional<IntInterval> known_block_rank(long d) {
  static const std::map<long, IntInterval> table{
      {5, {1, 1}}, {6, {2, 2}}, {7, {4, 4}}, {8, {5, 6}}, {9, {6, 9}}};
  auto it = table.find(d);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

long surgery_budget(long d, long r) {
  if (d < 5) throw Error(Errc::DegreeTooSmall, "surgery budget is defined for d >= 5");
  require_range(d, 5);
  if (r < 1) throw Error(Errc::InvalidArgument, "block rank must be at least 1");
  const long r_hat = r * (d - 1);
  return hypersurface_invariants(d).b2 - 2 * std::min(r_hat, h_count(d));
}

DegreeReport degree_report(long d) {
  const auto inv = hypersurface_invariants(d);
  DegreeReport r;
  r.d = d;
  r.b2 = inv.b2;
  r.sigma = inv.sigma;
  r.parity = inv.parity;
  r.b2_fiber = inv.b2 - d;
  if (d >= 2) r.h_d = h_count(d);
  r.r_d = known_block_rank(d);
  r.b2_reduced = inv.b2;
  if (r.r_d) {
    r.r_hat_d = IntInterval{r.r_d->lo * (d - 1), r.r_d->hi * (d - 1)};
    r.b2_reduced = surgery_budget(d, r.r_d->lo);
  }
  r.feasibility_floor = feasibility_floor(d);
  return r;
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns{"d",        "b2",       "sigma",    "parity",     "b2_fiber", "h_d",
                                                "r_d_lo",   "r_d_hi",   "r_hat_lo", "r_hat_hi",   "b2_reduced", "floor"};
  return columns;
}

std::string report_csv_header() {
  std::string out;
  for (const auto& c : report_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

namespace {
template <class T>
std::string opt_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}
}  // namespace

std::string to_csv_row(const DegreeReport& r) {
  std::ostringstream os;
  os << r.d << ',' << r.b2 << ',' << r.sigma << ',' << to_string(r.parity) << ',' << r.b2_fiber << ','
     << opt_field(r.h_d) << ',' << (r.r_d ? std::to_string(r.r_d->lo) : "") << ','
     << (r.r_d ? std::to_string(r.r_d->hi) : "") << ',' << (r.r_hat_d ? std::to_string(r.r_hat_d->lo) : "") << ','
     << (r.r_hat_d ? std::to_string(r.r_hat_d->hi) : "") << ',' << r.b2_reduced << ',' << r.feasibility_floor;
  return os.str();
}

nlohmann::json to_json(const DegreeReport& r) {
  auto opt = [](bool present, long v) { return present ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {{"d", r.d},
          {"b2", r.b2},
          {"sigma", r.sigma},
          {"parity", to_string(r.parity)},
          {"b2_fiber", r.b2_fiber},
          {"h_d", opt(r.h_d.has_value(), r.h_d.value_or(0))},
          {"r_d_lo", opt(r.r_d.has_value(), r.r_d ? r.r_d->lo : 0)},
          {"r_d_hi", opt(r.r_d.has_value(), r.r_d ? r.r_d->hi : 0)},
          {"r_hat_lo", opt(r.r_hat_d.has_value(), r.r_hat_d ? r.r_hat_d->lo : 0)},
          {"r_hat_hi", opt(r.r_hat_d.has_value(), r.r_hat_d ? r.r_hat_d->hi : 0)},
          {"b2_reduced", r.b2_reduced},
          {"floor", r.feasibility_floor}};
}

std::vector<AsymptoticRow> asymptotic_report(long d_max) {
  if (d_max < 5) throw Error(Errc::InvalidArgument, "asymptotic report starts at d = 5");
  require_range(d_max, 5);
  std::vector<AsymptoticRow> rows;
  for (long d = 5; d <= d_max; ++d) {
    AsymptoticRow row;
    row.d = d;
    if (auto known = known_block_rank(d)) {
      row.r_d = known->lo;
    } else {
      row.r_d = d * d / 8;
      row.extrapolated = true;
    }
    row.b2_reduced = surgery_budget(d, row.r_d);
    const double cube = static_cast<double>(d) * d * d;
    row.reduced_ratio = static_cast<double>(row.b2_reduced) / cube;
    row.removed_ratio = static_cast<double>(hypersurface_invariants(d).b2 - row.b2_reduced) / cube;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hypersurf
