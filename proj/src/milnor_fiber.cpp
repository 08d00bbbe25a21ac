#include "hypersurf/milnor_fiber.hpp"

#include <string>

#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {
void require_degree(long d) {
  if (d < 3) throw Error(Errc::DegreeTooSmall, "Milnor fiber forms need d >= 3, got " + std::to_string(d));
}
}  // namespace

FiberForms linking_form(long d) {
  require_degree(d);
  FiberForms f;
  f.d = d;
  f.theta = torus_seifert(d - 1, d);
  f.linking = kronecker(f.theta.matrix, lambda_matrix(static_cast<std::size_t>(d - 1)));
  f.intersection = f.linking + f.linking.transpose();
  return f;
}

IntMatrix intersection_form(long d) { return linking_form(d).intersection; }

long fiber_rank(long d) {
  require_degree(d);
  return (d - 1) * (d - 1) * (d - 2);
}

Inertia fiber_inertia(long d) { return inertia(intersection_form(d)); }

long fiber_signature(long d) { return fiber_inertia(d).signature(); }

}  // namespace hypersurf
