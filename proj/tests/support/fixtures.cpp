#include "support/fixtures.hpp"

namespace fixtures {

using puniv::Scalar;

PoissonStructure dual_numbers(const Field& f) {
  PoissonStructure p(f, 2, /*unit_index=*/0);
  p.set_product(0, 0, 0, Scalar::one(f));
  p.set_product(0, 1, 1, Scalar::one(f));
  return p;
}

PoissonStructure aff2(const Field& f) {
  PoissonStructure p(f, 2);
  p.set_bracket(0, 1, 1, Scalar::one(f));
  return p;
}

PoissonStructure h3(const Field& f) {
  PoissonStructure p(f, 3);
  p.set_product(0, 0, 1, Scalar::one(f));
  p.set_bracket(0, 2, 2, Scalar::one(f));
  return p;
}

PoissonStructure abelian(const Field& f, int n) { return PoissonStructure(f, n); }

PoissonStructure heisenberg(const Field& f) {
  PoissonStructure p(f, 3);
  p.set_bracket(0, 1, 2, Scalar::one(f));
  return p;
}

PoissonStructure sl2(const Field& f) {
  PoissonStructure p(f, 3);
  p.set_bracket(0, 1, 2, Scalar::one(f));                 // [e, f] = h
  p.set_bracket(0, 2, 0, Scalar::from_int(f, -2));        // [e, h] = -2e
  p.set_bracket(1, 2, 1, Scalar::from_int(f, 2));         // [f, h] = 2f
  return p;
}

PoissonStructure truncated_poly(const Field& f, int n) {
  PoissonStructure p(f, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (i + j <= n) p.set_product(i - 1, j - 1, i + j - 1, Scalar::one(f));
  return p;
}

PoissonStructure cyclic_group_algebra(const Field& f, int n) {
  PoissonStructure p(f, n, /*unit_index=*/0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.set_product(i, j, (i + j) % n, Scalar::one(f));
  return p;
}

PoissonStructure split_idempotents(const Field& f, int n) {
  PoissonStructure p(f, n);
  for (int i = 0; i < n; ++i) p.set_product(i, i, i, Scalar::one(f));
  return p;
}

}  // namespace fixtures
