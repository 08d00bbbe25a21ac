#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "hypersurf/int_matrix.hpp"

namespace hypersurf {

/// Sylvester inertia of a real symmetric form.
struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  std::size_t size() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Kronecker product; entry ((i,k),(j,l)) sits at (i·rows(b)+k, j·cols(b)+l).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Exact inertia by fraction-free symmetric elimination.
///
/// Pivots are taken in canonical order: the first remaining index with a
/// nonzero diagonal entry, or, when every remaining diagonal entry vanishes,
/// the first nonzero off-diagonal pair in row-major order (a 2×2 block that
/// contributes one positive and one negative direction). Each stored Schur
/// complement entry keeps the leading minor it is scaled by, so entries the
/// current pivot does not touch are never rewritten. Banded input therefore
/// costs O(n·b²) big-integer updates instead of O(n³).
///
/// Throws NonSymmetric unless s == sᵀ.
Inertia inertia(const IntMatrix& s);

/// Bareiss fraction-free determinant. Throws NonSquare.
Integer determinant(const IntMatrix& a);

/// det(t) ∈ {+1, −1}. Throws NonSquare.
bool is_unimodular(const IntMatrix& t);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Some integer x with a·x == b, or nullopt when none exists.
///
/// The column Hermite reduction a·U = H is deterministic, and free
/// coordinates of the reduced system are set to zero, so the returned
/// solution is canonical. Throws DimensionMismatch if rows(a) != b.size().
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b);

/// Inverse of a unipotent upper-triangular integer matrix (always integral).
/// Throws BadBlockShape if the input is not unipotent upper triangular.
IntMatrix unipotent_upper_inverse(const IntMatrix& u);

}  // namespace hypersurf
