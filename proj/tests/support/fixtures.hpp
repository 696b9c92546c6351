#ifndef PUNIV_TESTS_FIXTURES_HPP
#define PUNIV_TESTS_FIXTURES_HPP

#include "puniv/poisson.hpp"

namespace fixtures {

using puniv::Field;
using puniv::PoissonStructure;

/// k[X]/(X^2) with basis {1, x}, unit e1, abelian bracket.
PoissonStructure dual_numbers(const Field& f);

/// The affine 2-dimensional Lie algebra [f1, f2] = f2 with trivial product.
PoissonStructure aff2(const Field& f);

/// The 3-dimensional Poisson algebra e1^2 = e2, [e1, e3] = e3.
PoissonStructure h3(const Field& f);

/// Zero product, zero bracket.
PoissonStructure abelian(const Field& f, int n);

/// The Heisenberg Lie algebra [e1, e2] = e3 with trivial product.
PoissonStructure heisenberg(const Field& f);

/// sl(2): [e, f] = h, [h, e] = 2e, [h, f] = -2f, trivial product (basis
/// order e, f, h).  Not meaningful in characteristic 2.
PoissonStructure sl2(const Field& f);

/// Nonunital truncated polynomial algebra x k[x]/(x^{n+1}): e_i e_j =
/// e_{i+j} when i + j <= n, zero bracket.
PoissonStructure truncated_poly(const Field& f, int n);

/// Group algebra of Z/n: e_i e_j = e_{(i+j-2 mod n)+1}, unit e1, zero
/// bracket.
PoissonStructure cyclic_group_algebra(const Field& f, int n);

/// Split commutative product e_i e_j = delta_ij e_i, zero bracket.
PoissonStructure split_idempotents(const Field& f, int n);

}  // namespace fixtures

#endif
