#pragma once

#include <cstddef>

#include "hypersurf/block_search.hpp"
#include "hypersurf/int_matrix.hpp"

namespace hypersurf {

struct UnimodularTransform {
  IntMatrix matrix{1, 1};
  IntMatrix certified_gram{1, 1};  // matrixᵀ · gram · matrix
};

/// Change of basis taking a Gram matrix [[0, P], [Pᵀ, B]] (r×r blocks, P
/// unipotent upper triangular, B with even diagonal) to [[0, I], [I, 0]].
///
/// The result is T = [[I, C], [0, P⁻¹]]. The P⁻¹ factor normalizes the
/// pairing to I and turns B into B₁ = P⁻ᵀ·B·P⁻¹; column i of C then adds
/// −B₁(i,i)/2 · x_i and −B₁(i,j) · x_j for j < i to the i-th dual vector.
///
/// The block form [[0, I], [I, 0]] is the hyperbolic sum ⊕H after the
/// permutation interleaving basis vector i with r + i.
///
/// Throws BadBlockShape if gram is not symmetric of size 2r with the block
/// shape above, OddDiagonal if B has an odd diagonal entry.
UnimodularTransform hyperbolize(const IntMatrix& gram, std::size_t r);

/// True iff gram is exactly [[0, I], [I, 0]]. Throws OddSize for odd or
/// non-square input.
bool verify_hyperbolic(const IntMatrix& gram);

/// The block form [[0, I_r], [I_r, 0]].
IntMatrix hyperbolic_form(std::size_t r);

/// Restriction of the intersection form Θ_d + Θ_dᵀ to the span of a
/// certificate. A certificate on θ_d is lifted first.
IntMatrix restricted_intersection_gram(const BlockCertificate& cert, long d);

}  // namespace hypersurf
