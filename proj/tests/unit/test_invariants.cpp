#include "doctest.h"
#include "hypersurf/error.hpp"
#include "hypersurf/invariants.hpp"

using namespace hypersurf;

namespace {
Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}
}  // namespace

TEST_CASE("hypersurface_invariants") {
  const std::vector<std::pair<long, long>> table{{1, 1}, {2, 0}, {7, -5}, {22, -16}, {53, -35}};
  for (long d = 1; d <= 5; ++d) {
    const auto inv = hypersurface_invariants(d);
    CHECK(inv.b2 == table[d - 1].first);
    CHECK(inv.sigma == table[d - 1].second);
    CHECK(inv.parity == (d % 2 == 0 ? Parity::Even : Parity::Odd));
  }
  const auto d6 = hypersurface_invariants(6);
  CHECK(d6.b2 == 106);
  CHECK(d6.sigma == -64);
  CHECK(d6.parity == Parity::Even);
  CHECK(code_of([] { hypersurface_invariants(0); }) == Errc::InvalidArgument);
  CHECK(code_of([] { hypersurface_invariants(kMaxDegree + 1); }) == Errc::InvalidArgument);
}

TEST_CASE("closed forms hold across the whole range") {
  for (long d = 1; d <= 2000; ++d) {
    const auto inv = hypersurface_invariants(d);
    CHECK(inv.b2 == d * d * d - 4 * d * d + 6 * d - 2);
    CHECK(3 * inv.sigma == -d * (d * d - 4));
    if (d % 2 == 0) CHECK(inv.sigma % 16 == 0);
    CHECK((inv.b2 - inv.sigma) % 2 == 0);
  }
}

TEST_CASE("model_decomposition") {
  CHECK(model_decomposition(5) == ModelDecomposition{9, 35, 0});
  CHECK(model_decomposition(6) == ModelDecomposition{9, 0, 4});
  CHECK(model_decomposition(7) == ModelDecomposition{41, 105, 0});
  CHECK(code_of([] { model_decomposition(1); }) == Errc::InvalidArgument);
  for (long d = 2; d <= 500; ++d) {
    const auto m = model_decomposition(d);
    const auto inv = hypersurface_invariants(d);
    CHECK(m.s2s2_count >= 0);
    // b2 and σ of the connected sum reproduce those of V_d.
    CHECK(2 * m.s2s2_count + m.cp2bar_count + 22 * m.k3_count == inv.b2);
    CHECK(-m.cp2bar_count - 16 * m.k3_count == inv.sigma);
  }
}

TEST_CASE("h_count") {
  CHECK(h_count(6) == 9);
  CHECK(h_count(8) == 41);
  CHECK(h_count(9) == 113);
  const std::vector<long> row{9, 9, 41, 41, 113};
  for (long d = 5; d <= 9; ++d) CHECK(h_count(d) == row[d - 5]);
}

TEST_CASE("feasibility_floor") {
  CHECK(feasibility_floor(4) == 22);
  CHECK(feasibility_floor(3) == 7);
  CHECK(feasibility_floor(5) == 37);
  for (long d = 1; d <= 4; ++d) CHECK(feasibility_floor(d) == hypersurface_invariants(d).b2);
  for (long d = 5; d <= 200; ++d) {
    const auto inv = hypersurface_invariants(d);
    const long floor = feasibility_floor(d);
    CHECK(floor < inv.b2);
    CHECK((floor - inv.sigma) % 2 == 0);
    CHECK((floor - inv.sigma) / 2 >= 0);
    CHECK((floor + inv.sigma) / 2 >= 1);
  }
}

TEST_CASE("check_feasibility verdicts") {
  const auto v = check_feasibility(4, 21);
  CHECK_FALSE(v.feasible);
  CHECK(v.floor == 22);
  CHECK(v.verdict == "infeasible (10/8 floor 22)");
  CHECK(check_feasibility(4, 22).feasible);
  CHECK(check_feasibility(4, 22).verdict == "feasible");
  CHECK(check_feasibility(5, 38).verdict == "infeasible (parity: b2 must be odd)");
  CHECK(check_feasibility(5, 37).feasible);
  CHECK(check_feasibility(3, 5).verdict == "infeasible (b2+ >= 1 floor 7)");
}

TEST_CASE("known_block_rank and surgery_budget") {
  CHECK(known_block_rank(5) == IntInterval{1, 1});
  CHECK(known_block_rank(8) == IntInterval{5, 6});
  CHECK(known_block_rank(9) == IntInterval{6, 9});
  CHECK_FALSE(known_block_rank(4).has_value());
  CHECK_FALSE(known_block_rank(10).has_value());
  CHECK(surgery_budget(5, 1) == 45);
  CHECK(surgery_budget(7, 4) == 139);
  CHECK(surgery_budget(5, 100) == 35);
  CHECK(code_of([] { surgery_budget(4, 1); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { surgery_budget(5, 0); }) == Errc::InvalidArgument);
  for (long d = 5; d <= 9; ++d) CHECK(surgery_budget(d, known_block_rank(d)->lo) < hypersurface_invariants(d).b2);
}

TEST_CASE("degree_report rows") {
  const DegreeReport r5 = degree_report(5);
  CHECK(r5.b2 == 53);
  CHECK(r5.sigma == -35);
  CHECK(r5.h_d == 9);
  CHECK(r5.r_hat_d == IntInterval{4, 4});
  CHECK(r5.b2_reduced == 45);
  CHECK(r5.b2_fiber == 48);
  const DegreeReport r1 = degree_report(1);
  CHECK_FALSE(r1.h_d.has_value());
  CHECK(r1.b2_reduced == r1.b2);
  const std::vector<long> r_hat{4, 10, 24, 35, 48};
  for (long d = 5; d <= 9; ++d) CHECK(degree_report(d).r_hat_d->lo == r_hat[d - 5]);
  CHECK(degree_report(9).r_hat_d == IntInterval{48, 72});
}

TEST_CASE("report serialization keeps the fixed column order") {
  CHECK(report_csv_header() == "d,b2,sigma,parity,b2_fiber,h_d,r_d_lo,r_d_hi,r_hat_lo,r_hat_hi,b2_reduced,floor");
  CHECK(to_csv_row(degree_report(5)) == "5,53,-35,odd,48,9,1,1,4,4,45,37");
  CHECK(to_csv_row(degree_report(1)) == "1,1,1,odd,0,,,,,,1,1");
  const auto j = to_json(degree_report(2));
  CHECK(j["r_d_lo"].is_null());
  CHECK(j["h_d"] == 1);
  CHECK(j.size() == report_columns().size());
}

TEST_CASE("asymptotic_report") {
  const auto rows = asymptotic_report(100);
  CHECK(rows.front().d == 5);
  CHECK(rows.front().b2_reduced == 45);
  CHECK(rows.front().reduced_ratio == doctest::Approx(0.36));
  CHECK(rows[4].d == 9);
  CHECK(rows[4].r_d == 6);
  CHECK_FALSE(rows[4].extrapolated);
  CHECK(rows.back().extrapolated);
  CHECK(rows.back().reduced_ratio > 0.7);
  CHECK(rows.back().reduced_ratio < 0.75);
  for (std::size_t i = 10; i < rows.size(); ++i) CHECK(rows[i].reduced_ratio >= rows[i - 1].reduced_ratio);
  CHECK(code_of([] { asymptotic_report(4); }) == Errc::InvalidArgument);
}
