#pragma once

#include "hypersurf/int_matrix.hpp"
#include "hypersurf/polynomial.hpp"

namespace hypersurf {

/// Orientation sign applied to every torus-knot Seifert matrix. With −1 the
/// Milnor fiber of degree 3 carries the negative definite D4 form.
inline constexpr int kSeifertSign = -1;

/// k×k matrix with 1 on the diagonal and −1 on the superdiagonal.
/// Throws InvalidArgument for k == 0.
IntMatrix lambda_matrix(std::size_t k);

/// Seifert form of the fiber surface of the (p,q) torus knot.
struct SeifertData {
  long p = 0;
  long q = 0;
  int sign = kSeifertSign;
  IntMatrix matrix{1, 1};
};

/// sign·(Λ_{p−1} ⊗ Λ_{q−1}), of size (p−1)(q−1).
/// Throws DegenerateKnot if p or q is 1, NotCoprime if gcd(p,q) > 1, and
/// InvalidArgument for non-positive parameters.
SeifertData torus_seifert(long p, long q);

/// (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1)), normalized like
/// alexander_from_seifert. Throws NotCoprime, or InvalidArgument if p or q < 1.
IntPolynomial torus_alexander_closed(long p, long q);

/// Signature of (1 − ω)V + (1 − ω̄)Vᵀ at ω = exp(2πik/n).
///
/// The form is evaluated exactly at a rational point on the unit circle
/// certified (by MPFR directed rounding and a Sturm count) to lie on the
/// same arc between Alexander roots as ω, where the signature is constant.
/// Throws InvalidRoot unless 0 < k < n, JumpPoint if ω is a root of the
/// Alexander polynomial.
long tristram_levine(const SeifertData& v, long k, long n);

nlohmann::json to_json(const SeifertData& s);
SeifertData seifert_from_json(const nlohmann::json& j);

}  // namespace hypersurf
