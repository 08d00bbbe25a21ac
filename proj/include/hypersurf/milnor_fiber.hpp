#pragma once

#include "hypersurf/knot_forms.hpp"
#include "hypersurf/linalg.hpp"

namespace hypersurf {

/// Forms on the Milnor fiber F_d of degree d.
///
/// Basis of H_2(F_d) = H_1(Σ_d) ⊗ Z^{d−1} is flattened lexicographically,
/// surface index outer and cover index inner: (i, k) ↦ i·(d−1) + k.
struct FiberForms {
  long d = 0;
  SeifertData theta;          // Seifert form of T(d−1, d)
  IntMatrix linking{1, 1};    // θ_d ⊗ Λ_{d−1}
  IntMatrix intersection{1, 1};  // linking + linkingᵀ
};

/// All forms of F_d. Throws DegreeTooSmall for d < 3.
FiberForms linking_form(long d);

/// Θ_d + Θ_dᵀ. Throws DegreeTooSmall for d < 3.
IntMatrix intersection_form(long d);

/// Rank of H_2(F_d): (d−1)²(d−2).
long fiber_rank(long d);

/// Exact inertia / signature of the intersection form.
Inertia fiber_inertia(long d);
long fiber_signature(long d);

}  // namespace hypersurf
