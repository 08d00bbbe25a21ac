#include "hypersurf/knot_forms.hpp"

#include <numeric>
#include <vector>

#include <mpfr.h>

#include "hypersurf/error.hpp"
#include "hypersurf/linalg.hpp"

namespace hypersurf {

IntMatrix lambda_matrix(std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "lambda_matrix needs k >= 1");
  IntMatrix m = IntMatrix::identity(k);
  for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = -1;
  return m;
}

SeifertData torus_seifert(long p, long q) {
  if (p < 1 || q < 1) throw Error(Errc::InvalidArgument, "torus knot parameters must be positive");
  if (p == 1 || q == 1) throw Error(Errc::DegenerateKnot, "T(p,q) with p or q equal to 1 is the unknot");
  if (std::gcd(p, q) != 1) throw Error(Errc::NotCoprime, "torus knot parameters must be coprime");
  SeifertData s;
  s.p = p;
  s.q = q;
  s.sign = kSeifertSign;
  s.matrix = Integer(kSeifertSign) * kronecker(lambda_matrix(p - 1), lambda_matrix(q - 1));
  return s;
}

IntPolynomial torus_alexander_closed(long p, long q) {
  if (p < 1 || q < 1) throw Error(Errc::InvalidArgument, "torus knot parameters must be positive");
  if (std::gcd(p, q) != 1) throw Error(Errc::NotCoprime, "torus knot parameters must be coprime");
  auto cyclic = [](long e) { return IntPolynomial::monomial(1, static_cast<std::size_t>(e)) - IntPolynomial{1}; };
  const IntPolynomial num = cyclic(p * q) * cyclic(1);
  return divide_exact(divide_exact(num, cyclic(p)), cyclic(q)).normalized();
}

namespace {

using RatPoly = std::vector<mpq_class>;  // ascending degree, trimmed

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpq_class evaluate(const RatPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly remainder(RatPoly num, const RatPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    const mpq_class f = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

// Number of distinct real roots in (lo, hi]; both ends must be non-roots.
std::size_t sturm_count(const IntPolynomial& poly, const mpq_class& lo, const mpq_class& hi) {
  std::vector<RatPoly> chain;
  RatPoly p0(poly.coefficients().begin(), poly.coefficients().end());
  RatPoly p1;
  for (std::size_t k = 1; k < p0.size(); ++k) p1.push_back(p0[k] * static_cast<long>(k));
  trim(p1);
  chain.push_back(std::move(p0));
  if (!p1.empty()) chain.push_back(std::move(p1));
  while (chain.size() >= 2) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&](const mpq_class& x) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& p : chain) {
      const int s = sgn(evaluate(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(lo) - variations(hi);
}

// Simplest rational (smallest denominator, then numerator) in [lo, hi].
mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (mpq_class(fl) == lo) return fl;
  if (mpq_class(fl + 1) <= hi) return fl + 1;
  const mpq_class inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return mpq_class(fl) + 1 / inner;
}

mpq_class to_rational(const mpfr_t x) {
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  mpq_class r(mant);
  if (e > 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  if (e < 0) mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

// Rational interval certified to contain cot(πk/n) for 0 < k < n.
std::pair<mpq_class, mpq_class> cot_bracket(long k, long n, mpfr_prec_t prec) {
  mpfr_t pi, x_lo, x_hi, c_lo, c_hi;
  mpfr_inits2(prec, pi, x_lo, x_hi, c_lo, c_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_mul_ui(x_lo, pi, static_cast<unsigned long>(k), MPFR_RNDD);
  mpfr_div_ui(x_lo, x_lo, static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_const_pi(pi, MPFR_RNDU);
  mpfr_mul_ui(x_hi, pi, static_cast<unsigned long>(k), MPFR_RNDU);
  mpfr_div_ui(x_hi, x_hi, static_cast<unsigned long>(n), MPFR_RNDU);
  // cot is decreasing on (0, π)
  mpfr_cot(c_lo, x_hi, MPFR_RNDD);
  mpfr_cot(c_hi, x_lo, MPFR_RNDU);
  std::pair<mpq_class, mpq_class> out{to_rational(c_lo), to_rational(c_hi)};
  mpfr_clears(pi, x_lo, x_hi, c_lo, c_hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Real form of the Hermitian matrix S − i·(a/b)·K, scaled by b > 0.
IntMatrix realified(const IntMatrix& sym, const IntMatrix& skew, const Integer& a, const Integer& b) {
  const std::size_t n = sym.rows();
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = b * sym(i, j);
      m(n + i, n + j) = b * sym(i, j);
      m(i, n + j) = a * skew(i, j);
      m(n + i, j) = -a * skew(i, j);
    }
  return m;
}

}  // namespace

long tristram_levine(const SeifertData& v, long k, long n) {
  if (n < 2 || k <= 0 || k >= n) throw Error(Errc::InvalidRoot, "need 0 < k < n");
  const IntMatrix& seifert = v.matrix;
  const IntPolynomial alexander = alexander_from_seifert(seifert);
  const auto order = static_cast<std::size_t>(n / std::gcd(k, n));
  if (alexander.is_zero() || divide_monic(alexander, cyclotomic(order)).second.is_zero())
    throw Error(Errc::JumpPoint, "exp(2πi·" + std::to_string(k) + "/" + std::to_string(n) +
                                     ") is a root of the Alexander polynomial");

  // (1−ω)V + (1−ω̄)Vᵀ = (1 − cos θ)·(S − i·cot(θ/2)·K) with S = V+Vᵀ,
  // K = V−Vᵀ and θ = 2πk/n; the positive factor does not affect inertia.
  const IntMatrix sym = seifert + seifert.transpose();
  const IntMatrix skew = seifert - seifert.transpose();

  // Real roots of det of the real form, as a polynomial in the cotangent
  // parameter, are exactly the jump points of the signature function.
  std::vector<Integer> samples;
  for (std::size_t c = 0; c <= 2 * sym.rows(); ++c)
    samples.push_back(determinant(realified(sym, skew, Integer(static_cast<unsigned long>(c)), 1)));
  const IntPolynomial jumps = interpolate_integer_points(samples);
  const RatPoly jump_poly(jumps.coefficients().begin(), jumps.coefficients().end());

  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    const auto [lo, hi] = cot_bracket(k, n, prec);
    if (sgn(evaluate(jump_poly, lo)) == 0 || sgn(evaluate(jump_poly, hi)) == 0) continue;
    if (sturm_count(jumps, lo, hi) != 0) continue;
    mpq_class c = simplest_between(lo, hi);
    c.canonicalize();
    const Inertia in = inertia(realified(sym, skew, c.get_num(), c.get_den()));
    return in.signature() / 2;
  }
  throw Error(Errc::JumpPoint, "could not separate the evaluation point from the Alexander roots");
}

nlohmann::json to_json(const SeifertData& s) {
  return {{"p", s.p}, {"q", s.q}, {"sign", s.sign}, {"matrix", to_json(s.matrix)}};
}

SeifertData seifert_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("sign") || !j.contains("matrix"))
    throw Error(Errc::Parse, "Seifert JSON needs p, q, sign and matrix");
  SeifertData s;
  s.p = j["p"].get<long>();
  s.q = j["q"].get<long>();
  s.sign = j["sign"].get<int>();
  s.matrix = matrix_from_json(j["matrix"]);
  return s;
}

}  // namespace hypersurf
