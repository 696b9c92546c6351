#ifndef PUNIV_MODULE_FUNCTORS_HPP
#define PUNIV_MODULE_FUNCTORS_HPP

#include <memory>
#include <string>
#include <vector>

#include "puniv/bialgebra.hpp"
#include "puniv/poisson.hpp"
#include "puniv/universal.hpp"

namespace puniv {

/// A finite-dimensional module over the universal algebra A = P(P,Q): one
/// action matrix per generator x(s,i) over the base field, columns giving
/// the images of the module basis.  Being a module means the matrices
/// pairwise commute and every relation of J evaluates to the zero matrix.
class AModuleStructure {
public:
  AModuleStructure(std::shared_ptr<const UniversalPresentation> algebra, int dim,
                   std::vector<ScalarMatrix> actions);

  const UniversalPresentation& algebra() const { return *algebra_; }
  const std::shared_ptr<const UniversalPresentation>& algebra_ptr() const { return algebra_; }
  int dim() const { return dim_; }
  /// Action matrix of the generator x(s,i).
  const ScalarMatrix& action(int s, int i) const;
  /// Coefficient of v_t in x(s,i) . v_b.
  Scalar action_coeff(int s, int i, int t, int b) const { return action(s, i).at(t, b); }

  /// Empty report iff the matrices commute pairwise and annihilate every
  /// relation of the presentation.
  std::vector<LawFailure> verify() const;

private:
  std::shared_ptr<const UniversalPresentation> algebra_;
  int dim_;
  std::vector<ScalarMatrix> actions_;  // row-major over (s, i)
};

/// The induced Q-module structure on U (x) V for a Poisson P-module U and an
/// A-module V:
///   f_i |> (u_a (x) v_b) = sum_j (e_j |> u_a) (x) (x(j,i) . v_b)
///   f_i ~> (u_a (x) v_b) = sum_j (e_j ~> u_a) (x) (x(j,i) . v_b)
/// on the tensor basis u_a (x) v_b, flattened as (a, b) -> a * dim(V) + b.
/// The result is returned with its own structure constants over Q.
PoissonModuleStructure tensor_module(const PoissonModuleStructure& u, const AModuleStructure& v);

/// One summand of an emitted module relation: coeff * [op] y(a, b), where op
/// is empty (plain generator), `assoc` (e_k |> .) or `lie` (e_k ~> .).  In
/// the U-flavoured presentation coefficients live in A (reduced polynomial
/// form); in the V-flavoured one they are scalars embedded as constants.
struct ModuleRelationTerm {
  enum class Op { none, assoc, lie };
  Op op = Op::none;
  int op_index = -1;  ///< the e_k applying when op != none (0-based)
  int gen_a = 0, gen_b = 0;
  Polynomial coeff;
};

struct ModuleRelationRow {
  RelationKind kind;  ///< product (associative family) or bracket (Lie family)
  int i1, i2, i3;     ///< the (s,i,j) resp. (j,r,a) family indices, 0-based
  std::vector<ModuleRelationTerm> terms;
};

/// A generators-and-relations presentation of one of the two universal
/// module constructions, plus the structural comodule-style map that comes
/// with it (rho: W -> U (x) U(U,W) or eta: W -> V(V,W) (x) V).
struct ModulePresentation {
  char flavour;  ///< 'U' or 'V'
  int gen_rows, gen_cols;
  std::vector<std::string> gen_names;  ///< row-major
  std::vector<ModuleRelationRow> relations;
  std::vector<std::string> map_lines;  ///< textual form of rho resp. eta per basis vector
  std::vector<std::string> basis_labels;  ///< labels for the operator side prints

  const std::string& gen_name(int a, int b) const {
    return gen_names[static_cast<std::size_t>(a) * gen_cols + b];
  }
};

/// Canonical one-line rendering of a relation row, e.g.
/// "product(1,1,2): y11 - x11*y12 + 2*(e1 |> y21)".
std::string relation_str(const ModulePresentation& pres, const ModuleRelationRow& row);

/// Presentation of the universal object U(U,W) attached to a Poisson
/// P-module U and a Poisson Q-module W: generators Y(s,r) with s over U and
/// r over W, relations indexed by (s, i, j) with A-coefficients reduced in
/// the quotient, and rho(w_r) = sum_s u_s (x) y(s,r).
ModulePresentation emit_U_presentation(const PoissonModuleStructure& u,
                                       const PoissonModuleStructure& w,
                                       const UniversalPresentation& algebra);

/// Presentation of the universal object V(V,W) attached to an A-module V
/// and a Poisson Q-module W: generators y(r,i) with r over W and i over V,
/// scalar-coefficient relations indexed by (j, r, a) whose terms carry the
/// formal operators e_k |> and e_k ~>, and eta(w_r) = sum_s y(r,s) (x) v_s.
ModulePresentation emit_V_presentation(const AModuleStructure& v,
                                       const PoissonModuleStructure& w);

}  // namespace puniv

#endif
