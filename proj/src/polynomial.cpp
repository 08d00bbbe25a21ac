#include "hypersurf/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hypersurf/error.hpp"
#include "hypersurf/linalg.hpp"

namespace hypersurf {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::normalized() const {
  if (is_zero()) return {};
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; });
  std::vector<Integer> out(first, coeffs_.end());
  if (sgn(out.front()) < 0)
    for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  const Integer& lead = den.coefficients().back();
  if (lead != 1 && lead != -1) throw Error(Errc::InvalidArgument, "divisor must have leading coefficient ±1");
  std::vector<Integer> rem = num.coefficients();
  const long dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial{}, num};
  std::vector<Integer> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  for (long k = num.degree(); k >= dd; --k) {
    const Integer c = rem[k] * lead;  // lead == ±1, so this divides by lead
    quot[k - dd] = c;
    if (sgn(c) == 0) continue;
    for (long i = 0; i <= dd; ++i)
      mpz_submul(rem[k - dd + i].get_mpz_t(), c.get_mpz_t(), den.coefficients()[i].get_mpz_t());
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  auto [q, r] = divide_monic(num, den);
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division is not exact");
  return q;
}

IntPolynomial cyclotomic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclotomic index must be positive");
  // t^n − 1 = ∏_{m | n} Φ_m(t)
  IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial{1};
  for (std::size_t m = 1; m < n; ++m)
    if (n % m == 0) p = divide_exact(p, cyclotomic(m));
  return p;
}

IntPolynomial interpolate_integer_points(const std::vector<Integer>& values) {
  if (values.empty()) return {};
  const std::size_t n = values.size();
  // Newton divided differences at nodes 0, 1, …, n−1.
  std::vector<mpq_class> diff(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / mpq_class(static_cast<long>(level));
      if (i == level) break;
    }
  // Horner expansion of Σ diff[k]·∏_{j<k}(t − j).
  std::vector<mpq_class> poly{diff[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1);
    const mpq_class node(static_cast<long>(k));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= node * poly[i];
    }
    next[0] += diff[k];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error(Errc::InvalidArgument, "interpolant has non-integer coefficients");
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial alexander_from_seifert(const IntMatrix& v) {
  if (!v.is_square()) throw Error(Errc::NonSquare, "Seifert matrix must be square");
  const IntMatrix vt = v.transpose();
  std::vector<Integer> values;
  for (std::size_t t = 0; t <= v.rows(); ++t)
    values.push_back(determinant(v - Integer(static_cast<unsigned long>(t)) * vt));
  return interpolate_integer_points(values).normalized();
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coefficients()[k];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

}  // namespace hypersurf
