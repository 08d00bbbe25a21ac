#include "hypersurf/hyperbolize.hpp"

#include "hypersurf/error.hpp"
#include "hypersurf/linalg.hpp"
#include "hypersurf/milnor_fiber.hpp"

namespace hypersurf {

UnimodularTransform hyperbolize(const IntMatrix& gram, std::size_t r) {
  if (r == 0 || !gram.is_square() || gram.rows() != 2 * r)
    throw Error(Errc::BadBlockShape, "gram must be 2r x 2r");
  if (!gram.is_symmetric()) throw Error(Errc::BadBlockShape, "gram must be symmetric");

  IntMatrix p(r, r), b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(gram(i, j)) != 0) throw Error(Errc::BadBlockShape, "x block must vanish");
      p(i, j) = gram(i, r + j);
      b(i, j) = gram(r + i, r + j);
    }
  for (std::size_t i = 0; i < r; ++i)
    if (mpz_odd_p(b(i, i).get_mpz_t())) throw Error(Errc::OddDiagonal, "dual block has an odd diagonal entry");

  const IntMatrix p_inv = unipotent_upper_inverse(p);
  const IntMatrix b1 = p_inv.transpose() * b * p_inv;

  IntMatrix t = IntMatrix::identity(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) t(r + i, r + j) = p_inv(i, j);
    Integer half = b1(i, i);
    mpz_divexact_ui(half.get_mpz_t(), half.get_mpz_t(), 2);
    t(i, r + i) = -half;
    for (std::size_t j = 0; j < i; ++j) t(j, r + i) = -b1(i, j);
  }

  UnimodularTransform out;
  out.certified_gram = t.transpose() * gram * t;
  out.matrix = std::move(t);
  return out;
}

bool verify_hyperbolic(const IntMatrix& gram) {
  if (!gram.is_square() || gram.rows() % 2 != 0) throw Error(Errc::OddSize, "gram must be square of even size");
  return gram == hyperbolic_form(gram.rows() / 2);
}

IntMatrix hyperbolic_form(std::size_t r) {
  IntMatrix h(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    h(i, r + i) = 1;
    h(r + i, i) = 1;
  }
  return h;
}

IntMatrix restricted_intersection_gram(const BlockCertificate& cert, long d) {
  const IntMatrix q = intersection_form(d);
  if (cert.ambient_rank == q.rows()) {
    if (!verify_block_certificate(linking_form(d).linking, cert))
      throw Error(Errc::InvalidCertificate, "certificate does not verify on the fiber's linking form");
    return certificate_gram(q, cert);
  }
  return certificate_gram(q, lift_certificate(cert, d));
}

}  // namespace hypersurf
