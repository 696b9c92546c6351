#ifndef PUNIV_BIALGEBRA_HPP
#define PUNIV_BIALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "puniv/universal.hpp"

namespace puniv {

/// A violated coalgebra/comodule law with a human-readable location.
struct LawFailure {
  std::string law;
  std::string where;
  std::string str() const { return law + " at " + where; }
};

/// Comultiplication and counit of P(P) on generators, kept as explicit data
/// so corrupted variants can be fed to the verifiers.  The standard shape is
/// Delta(x(i,j)) = sum_s x(i,s) (x) x(s,j) and eps(x(i,j)) = delta(i,j).
struct CoalgebraOnGenerators {
  /// One summand x(a,b) (x) x(c,d) of Delta on some generator.
  struct TensorTerm {
    int a, b, c, d;
  };
  int n = 0;
  std::vector<std::vector<std::vector<TensorTerm>>> delta;  ///< delta[i][j]
  ScalarMatrix epsilon;                                     ///< n x n scalar values

  static CoalgebraOnGenerators standard(int n, const Field& f);
};

/// P(P) together with its universal bialgebra structure.
struct UniversalBialgebra {
  UniversalPresentation presentation;  ///< P(P,P), the square case
  CoalgebraOnGenerators coalgebra;
};

/// Builds P(P) = P(P,P) and the standard comultiplication/counit data.
UniversalBialgebra universal_bialgebra(const PoissonStructure& p,
                                       TermOrder order = TermOrder::degrevlex);

/// The r-fold tensor power of the quotient algebra, realized as one
/// polynomial ring with leg-blocked variables (leg l >= 1 gets l primes on
/// the variable names) modulo the block-embedded copies of the ideal.  The
/// embedded reduced bases stay a reduced basis of the sum, so nothing is
/// recomputed.
struct TensorPowerRing {
  CtxPtr ctx;
  IdealBasis ideal;
  std::size_t base_nvars;
  int legs;

  QuotientRing ring() const { return QuotientRing(ctx, ideal); }
  std::size_t leg_var(int leg, std::size_t base_var) const {
    return static_cast<std::size_t>(leg) * base_nvars + base_var;
  }
  /// Transports a polynomial of the base ring into leg `leg`.
  Polynomial embed(int leg, const Polynomial& p) const;
};

TensorPowerRing tensor_power(const UniversalPresentation& u, int legs);

/// The algebra map H -> H (x) H induced by the Delta data, evaluated on an
/// element of the base ring; lands in tensor_power(u, 2) legs (l0, l1).
Polynomial delta_hat(const Polynomial& p, const CoalgebraOnGenerators& co,
                     const UniversalPresentation& u, const TensorPowerRing& t2,
                     int leg0 = 0, int leg1 = 1);

/// The scalar algebra map H -> k induced by the epsilon data.
Scalar epsilon_hat(const Polynomial& p, const CoalgebraOnGenerators& co,
                   const UniversalPresentation& u);

/// Checks that the coalgebra data descends to the quotient and satisfies the
/// bialgebra laws: Delta maps every relation into J(x)1 + 1(x)J, epsilon
/// kills every relation, Delta is coassociative on generators and epsilon is
/// a two-sided counit on generators.  Empty report == bialgebra.
std::vector<LawFailure> verify_bialgebra(const UniversalPresentation& u,
                                         const CoalgebraOnGenerators& co);

/// Checks the comodule laws for a coaction P -> P (x) P(P) given by an
/// n x n matrix over the quotient (defaults to the universal eta):
/// (id (x) Delta) . rho = (rho (x) id) . rho and (id (x) eps) . rho = id.
std::vector<LawFailure> verify_comodule(const UniversalPresentation& u,
                                        const CoalgebraOnGenerators& co,
                                        const std::optional<Matrix<QuotientRing>>& coaction =
                                            std::nullopt);

/// A group-like element of P(P)* over a finite field: a scalar matrix
/// annihilating the ideal.  Convolution of group-likes is the matrix
/// product; the convolution-invertible ones are exactly those with an
/// invertible matrix.
struct GroupLike {
  ScalarMatrix matrix;
  std::optional<ScalarMatrix> inverse;  ///< set iff invertible
};

/// All group-likes of P(P) over the presentation's finite field, in
/// lexicographic row-major order.  The presentation must be the square case.
std::vector<GroupLike> group_likes(const UniversalPresentation& u,
                                   std::uint64_t guard = kDefaultEnumGuard);

/// Aut_Poiss(P) over a finite field, realized as the invertible group-likes
/// with their convolution (= matrix product) table; table[i][j] is the index
/// of elements[i] * elements[j].
struct AutomorphismGroup {
  std::vector<ScalarMatrix> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t grouplike_count;  ///< including non-invertible ones
};

AutomorphismGroup automorphism_group(const PoissonStructure& p,
                                     std::uint64_t guard = kDefaultEnumGuard);

}  // namespace puniv

#endif
