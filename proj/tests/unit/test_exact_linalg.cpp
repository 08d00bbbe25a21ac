#include <sstream>

#include "doctest.h"
#include "hypersurf/error.hpp"
#include "hypersurf/knot_forms.hpp"
#include "hypersurf/linalg.hpp"
#include "hypersurf/milnor_fiber.hpp"
#include "hypersurf/polynomial.hpp"
#include "oracles.hpp"
#include "random_forms.hpp"

using namespace hypersurf;
using testing_util::random_matrix;
using testing_util::random_symmetric;
using testing_util::random_unimodular;
using testing_util::uniform;

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

TEST_CASE("IntMatrix construction and shape") {
  CHECK(code_of([] { IntMatrix(0, 3); }) == Errc::InvalidArgument);
  CHECK(code_of([] { IntMatrix(2, 0); }) == Errc::InvalidArgument);
  const IntMatrix m = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.entries().size() == 6);
  CHECK(m.transpose() == IntMatrix::from_rows({{1, 4}, {2, 5}, {3, 6}}));
  CHECK(IntMatrix::from_columns({{1, 4}, {2, 5}, {3, 6}}) == m);
  CHECK(code_of([&] { (void)(m * m); }) == Errc::DimensionMismatch);
}

TEST_CASE("Matrix JSON round-trips exactly, including huge entries") {
  IntMatrix m = IntMatrix::from_rows({{1, -2}, {0, 7}});
  m(1, 0) = Integer("-123456789012345678901234567890");
  const auto j = to_json(m);
  CHECK(j["data"][1][0] == "-123456789012345678901234567890");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(nlohmann::json::parse(j.dump())) == m);
  CHECK(code_of([] { matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":2,"data":[["1"]]})")); }) ==
        Errc::Parse);
  CHECK(code_of([] { matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"data":[["x"]]})")); }) ==
        Errc::Parse);
}

TEST_CASE("kronecker examples") {
  const IntMatrix b = IntMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(kronecker(IntMatrix::identity(2), b) ==
        IntMatrix::from_rows({{1, 2, 0, 0}, {3, 4, 0, 0}, {0, 0, 1, 2}, {0, 0, 3, 4}}));
  CHECK(kronecker(IntMatrix::from_rows({{1}}), b) == b);
  const IntMatrix k = kronecker(lambda_matrix(2), lambda_matrix(2));
  CHECK(k.rows() == 4);
  CHECK(std::vector<Integer>(k.row(0).begin(), k.row(0).end()) == std::vector<Integer>{1, -1, -1, 1});
}

TEST_CASE("kronecker properties") {
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = random_matrix(2, 2, -3, 3);
    const IntMatrix b = random_matrix(3, 3, -3, 3);
    const IntMatrix c = random_matrix(2, 2, -3, 3);
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
    Integer expected;
    mpz_pow_ui(expected.get_mpz_t(), determinant(a).get_mpz_t(), 3);
    Integer db;
    mpz_pow_ui(db.get_mpz_t(), determinant(b).get_mpz_t(), 2);
    CHECK(determinant(kronecker(a, b)) == expected * db);
  }
}

TEST_CASE("inertia examples") {
  CHECK(inertia(IntMatrix::from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(inertia(IntMatrix::from_rows({{5, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}})) ==
        Inertia{1, 2, 1});
  const IntMatrix q3 = intersection_form(3);
  CHECK(inertia(q3) == Inertia{0, 4, 0});
  CHECK(oracle::descartes_inertia(q3) == Inertia{0, 4, 0});
  CHECK(code_of([] { inertia(IntMatrix::from_rows({{0, 1}, {0, 0}})); }) == Errc::NonSymmetric);
  CHECK(inertia(IntMatrix(3, 3)) == Inertia{0, 0, 3});
}

TEST_CASE("inertia agrees with the characteristic-polynomial oracle") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 9));
    IntMatrix s = random_symmetric(n, -3, 3);
    // Zero diagonals and low rank exercise the 2×2 pivots and the zero block.
    if (trial % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 0;
    if (trial % 5 == 0) {
      const IntMatrix g = random_matrix(n, 1, -2, 2);
      const IntMatrix h = random_matrix(n, 1, -2, 2);
      s = g * g.transpose() - h * h.transpose();
    }
    const Inertia in = inertia(s);
    CHECK(in == oracle::descartes_inertia(s));
    CHECK(in.size() == n);
    const Inertia neg = inertia(-s);
    CHECK(neg.signature() == -in.signature());
  }
}

TEST_CASE("Sylvester law under random unimodular congruence") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 12));
    const IntMatrix s = random_symmetric(n, -4, 4);
    const IntMatrix t = random_unimodular(n);
    REQUIRE(is_unimodular(t));
    CHECK(inertia(t.transpose() * s * t) == inertia(s));
  }
}

TEST_CASE("determinant examples and oracle") {
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(lambda_matrix(6)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{2, -1}, {-1, 2}})) == 3);
  CHECK(code_of([] { determinant(IntMatrix(2, 3)); }) == Errc::NonSquare);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 7));
    IntMatrix a = random_matrix(n, n, -5, 5);
    if (trial % 4 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j) * 2;
    CHECK(determinant(a) == oracle::cofactor_det(a));
  }
}

TEST_CASE("is_unimodular examples") {
  CHECK(is_unimodular(IntMatrix::identity(3)));
  CHECK(is_unimodular(IntMatrix::from_rows({{1, -2}, {0, 1}})));
  CHECK_FALSE(is_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})));
  CHECK(code_of([] { is_unimodular(IntMatrix(1, 2)); }) == Errc::NonSquare);
}

TEST_CASE("rank") {
  CHECK(rank(IntMatrix::identity(4)) == 4);
  CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(IntMatrix(2, 3)) == 0);
}

TEST_CASE("solve_integer examples") {
  auto solve = [](const IntMatrix& a, std::vector<long> b) {
    IntVector rhs(b.begin(), b.end());
    return solve_integer(a, rhs);
  };
  CHECK(solve(IntMatrix::from_rows({{2}}), {4}) == IntVector{2});
  CHECK_FALSE(solve(IntMatrix::from_rows({{2}}), {3}).has_value());
  CHECK(solve(IntMatrix::from_rows({{1, 1}, {0, 2}}), {3, 4}) == IntVector{1, 2});
  CHECK(code_of([&] { solve(IntMatrix::from_rows({{1, 1}}), {1, 2}); }) == Errc::DimensionMismatch);
  // Inconsistent over Q.
  CHECK_FALSE(solve(IntMatrix::from_rows({{1, 1}, {1, 1}}), {1, 2}).has_value());
  // Consistent over Q, not over Z.
  CHECK_FALSE(solve(IntMatrix::from_rows({{2, 4}, {6, 2}}), {1, 1}).has_value());
}

TEST_CASE("solve_integer returns exact solutions, deterministically") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform(1, 5));
    const auto cols = static_cast<std::size_t>(uniform(1, 6));
    const IntMatrix a = random_matrix(rows, cols, -4, 4);
    IntVector x0(cols);
    for (auto& e : x0) e = uniform(-3, 3);
    const IntVector b = a * x0;
    const auto x = solve_integer(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK(solve_integer(a, b) == x);
  }
}

TEST_CASE("unipotent_upper_inverse") {
  const IntMatrix l = lambda_matrix(5);
  const IntMatrix inv = unipotent_upper_inverse(l);
  CHECK(l * inv == IntMatrix::identity(5));
  for (const Integer& e : inv.entries()) CHECK((e == 0 || e == 1));
  CHECK(code_of([] { unipotent_upper_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})); }) == Errc::BadBlockShape);
  CHECK(code_of([] { unipotent_upper_inverse(IntMatrix::from_rows({{1, 0}, {1, 1}})); }) == Errc::BadBlockShape);
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a{1, -1, 1};
  CHECK(a.degree() == 2);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(a * IntPolynomial{1, 1} == IntPolynomial{1, 0, 0, 1});
  CHECK(a.evaluate(2) == 3);
  CHECK(to_string(a) == "t^2 - t + 1");
  CHECK(IntPolynomial{0, -1, 1}.normalized() == IntPolynomial{1, -1});
  const auto [q, r] = divide_monic(IntPolynomial{-1, 0, 0, 1}, IntPolynomial{-1, 1});
  CHECK(q == IntPolynomial{1, 1, 1});
  CHECK(r.is_zero());
  CHECK(code_of([] { divide_exact(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 1}); }) == Errc::InvalidArgument);
}

TEST_CASE("cyclotomic polynomials multiply to t^n - 1") {
  for (std::size_t n = 1; n <= 30; ++n) {
    IntPolynomial prod{1};
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::monomial(1, n) - IntPolynomial{1});
  }
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
}

TEST_CASE("interpolation recovers integer polynomials") {
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Integer> c(static_cast<std::size_t>(uniform(1, 8)));
    for (auto& e : c) e = uniform(-9, 9);
    const IntPolynomial p(c);
    std::vector<Integer> values;
    for (long t = 0; t <= static_cast<long>(c.size()); ++t) values.push_back(p.evaluate(t));
    CHECK(interpolate_integer_points(values) == p);
  }
  CHECK(code_of([] { interpolate_integer_points({0, 1, 3}); }) == Errc::InvalidArgument);
}

TEST_CASE("alexander_from_seifert examples") {
  CHECK(alexander_from_seifert(torus_seifert(2, 3).matrix) == IntPolynomial{1, -1, 1});
  CHECK(alexander_from_seifert(torus_seifert(2, 5).matrix) == IntPolynomial{1, -1, 1, -1, 1});
  CHECK(code_of([] { alexander_from_seifert(IntMatrix(2, 3)); }) == Errc::NonSquare);
}
