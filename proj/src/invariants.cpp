#include "graphbialg/invariants.hpp"

#include <stdexcept>

namespace graphbialg {

SolutionSpace invariant_subspace(const TwoStepAlgebra& a) {
  ExteriorIndex idx(a.dim());
  Mat stacked;
  for (int g = 0; g < a.dim_w(); ++g)
    stacked.append_rows(ad_matrix_on_lambda2(a, g, idx));
  SolutionSpace sp = nullspace(stacked);
  // re-verify: every basis vector is annihilated by every generator
  for (const auto& v : sp.basis) {
    ExtVector omega;
    omega.grade = 2;
    omega.coeff = v;
    for (int g = 0; g < a.dim_w(); ++g) {
      if (!ad_on_ext(a, a.w_basis(g), omega, idx).is_zero())
        throw std::logic_error("invariant_subspace: basis vector not invariant");
    }
  }
  return sp;
}

InvariantReport invariant_report(const TwoStepAlgebra& a) {
  InvariantReport rep;
  ExteriorIndex idx(a.dim());
  GradedMasks masks = graded_projectors(a, idx);
  SolutionSpace sp = invariant_subspace(a);
  rep.dim_invariants = static_cast<int>(sp.dimension());
  rep.dim_lambda2z = static_cast<int>(masks.lambda2_z.size());
  bool supported = true;
  for (const auto& v : sp.basis)
    for (int i = 0; i < idx.dim2(); ++i)
      if (masks.component[static_cast<std::size_t>(i)] != 2 &&
          !v[static_cast<std::size_t>(i)].is_zero())
        supported = false;
  rep.equal = supported && rep.dim_invariants == rep.dim_lambda2z;
  rep.basis = std::move(sp.basis);
  return rep;
}

bool invariants_equal_lambda2z(const TwoStepAlgebra& a) {
  return invariant_report(a).equal;
}

}  // namespace graphbialg
