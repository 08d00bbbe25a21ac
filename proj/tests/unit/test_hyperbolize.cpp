#include "doctest.h"
#include "hypersurf/block_search.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/hyperbolize.hpp"
#include "hypersurf/knot_forms.hpp"
#include "hypersurf/linalg.hpp"
#include "hypersurf/milnor_fiber.hpp"
#include "random_forms.hpp"

using namespace hypersurf;
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

IntMatrix block_gram(const IntMatrix& p, const IntMatrix& b) {
  const std::size_t r = p.rows();
  IntMatrix g(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      g(i, r + j) = p(i, j);
      g(r + j, i) = p(i, j);
      g(r + i, r + j) = b(i, j);
    }
  return g;
}
}  // namespace

TEST_CASE("hyperbolize examples") {
  const auto t = hyperbolize(IntMatrix::from_rows({{0, 1}, {1, 4}}), 1);
  CHECK(t.matrix == IntMatrix::from_rows({{1, -2}, {0, 1}}));
  CHECK(t.certified_gram == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  for (std::size_t r = 1; r <= 4; ++r) CHECK(hyperbolize(hyperbolic_form(r), r).matrix == IntMatrix::identity(2 * r));
}

TEST_CASE("hyperbolize errors") {
  CHECK(code_of([] { hyperbolize(IntMatrix::from_rows({{0, 1}, {1, 3}}), 1); }) == Errc::OddDiagonal);
  CHECK(code_of([] { hyperbolize(IntMatrix::from_rows({{2, 1}, {1, 0}}), 1); }) == Errc::BadBlockShape);
  CHECK(code_of([] { hyperbolize(IntMatrix::from_rows({{0, 2}, {2, 0}}), 1); }) == Errc::BadBlockShape);
  CHECK(code_of([] { hyperbolize(IntMatrix::from_rows({{0, 1}, {0, 0}}), 1); }) == Errc::BadBlockShape);
  CHECK(code_of([] { hyperbolize(hyperbolic_form(2), 1); }) == Errc::BadBlockShape);
  // Pairing block lower triangular instead of upper.
  IntMatrix p = IntMatrix::identity(2);
  p(1, 0) = 1;
  CHECK(code_of([&] { hyperbolize(block_gram(p, IntMatrix(2, 2)), 2); }) == Errc::BadBlockShape);
}

TEST_CASE("verify_hyperbolic") {
  CHECK(verify_hyperbolic(IntMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK_FALSE(verify_hyperbolic(IntMatrix::from_rows({{0, 1}, {1, 2}})));
  CHECK(verify_hyperbolic(hyperbolic_form(4)));
  CHECK(code_of([] { verify_hyperbolic(IntMatrix::identity(3)); }) == Errc::OddSize);
}

TEST_CASE("hyperbolize random valid-shaped instances") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix p = IntMatrix::identity(r);
    IntMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) p(i, j) = uniform(-3, 3);
      for (std::size_t j = i; j < r; ++j) b(i, j) = b(j, i) = uniform(-9, 9);
      b(i, i) = 2 * uniform(-4, 4);
    }
    const IntMatrix g = block_gram(p, b);
    const auto t = hyperbolize(g, r);
    CHECK(is_unimodular(t.matrix));
    CHECK(t.matrix.transpose() * g * t.matrix == t.certified_gram);
    CHECK(verify_hyperbolic(t.certified_gram));
    CHECK(inertia(g) == Inertia{r, r, 0});
  }
}

TEST_CASE("hyperbolize the restricted intersection form of the lifted degree 5 certificate") {
  const auto res = search_block(torus_seifert(4, 5).matrix, {1, 1, 100'000'000, 1});
  REQUIRE(res.certificate.has_value());
  const IntMatrix g = restricted_intersection_gram(*res.certificate, 5);
  CHECK(g.rows() == 8);
  CHECK(g == certificate_gram(intersection_form(5), lift_certificate(*res.certificate, 5)));
  const auto t = hyperbolize(g, 4);
  CHECK(abs(determinant(t.matrix)) == 1);
  CHECK(t.matrix.transpose() * g * t.matrix == hyperbolic_form(4));
  CHECK(t.certified_gram == hyperbolic_form(4));
}
