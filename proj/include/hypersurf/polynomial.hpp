#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hypersurf/int_matrix.hpp"

namespace hypersurf {

/// Univariate polynomial in t with arbitrary-precision integer coefficients,
/// stored by ascending degree. Trailing zero coefficients are always trimmed,
/// so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; −1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& t) const;

  /// Divides out every factor of t and makes the constant term positive.
  IntPolynomial normalized() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder for a divisor with leading coefficient ±1.
/// Throws InvalidArgument otherwise.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& num, const IntPolynomial& den);

/// Quotient of an exact division by a ±1-leading divisor; throws
/// InvalidArgument when the remainder is nonzero.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

/// The n-th cyclotomic polynomial.
IntPolynomial cyclotomic(std::size_t n);

/// The polynomial of degree ≤ values.size()−1 through (k, values[k]) for
/// k = 0, 1, …. Throws InvalidArgument if its coefficients are not integers.
IntPolynomial interpolate_integer_points(const std::vector<Integer>& values);

/// det(v − t·vᵀ), normalized (no factor t, positive constant term).
/// Throws NonSquare.
IntPolynomial alexander_from_seifert(const IntMatrix& v);

/// Human-readable form such as "t^2 - t + 1".
std::string to_string(const IntPolynomial& p);

}  // namespace hypersurf
