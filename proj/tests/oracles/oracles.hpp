#pragma once

// Independent reference computations used only by the tests. Nothing here
// shares code with the library beyond the IntMatrix container.

#include <cstdint>
#include <vector>

#include "hypersurf/block_search.hpp"
#include "hypersurf/int_matrix.hpp"
#include "hypersurf/linalg.hpp"

namespace oracle {

using hypersurf::Integer;
using hypersurf::IntMatrix;

// det(x·I − a), ascending coefficients (Faddeev–LeVerrier over Z).
std::vector<Integer> charpoly(const IntMatrix& a);

// Inertia of a symmetric matrix from sign changes of its characteristic
// polynomial (exact: all roots are real).
hypersurf::Inertia descartes_inertia(const IntMatrix& s);

// Laplace expansion along the first row. Intended for n ≤ 8.
Integer cofactor_det(const IntMatrix& a);

// Block conditions recomputed entry by entry from the raw vectors.
bool block_conditions(const IntMatrix& form, const hypersurf::BlockCertificate& cert);

// (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1)) by int64 long division,
// ascending coefficients.
std::vector<std::int64_t> torus_alexander(long p, long q);

// Signature of (1 − ω)V + (1 − ω̄)Vᵀ at ω = e^{iφ} from double-precision
// eigenvalues. Throws std::runtime_error if an eigenvalue is within gap of 0.
long hermitian_signature(const IntMatrix& v, double phi, double gap = 1e-6);

}  // namespace oracle
