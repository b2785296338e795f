#pragma once

#include "graphbialg/exterior.hpp"

namespace graphbialg {

// Basis of (Lambda^2 n)^n = {omega : ad_x omega = 0 for all x}, computed as
// the nullspace of the stacked ad matrices of the W-basis generators
// (central generators act by zero and contribute nothing).
SolutionSpace invariant_subspace(const TwoStepAlgebra& a);

// True iff (Lambda^2 n)^n equals Lambda^2 z. Containment of Lambda^2 z is
// automatic, so this checks the dimension and that every computed basis
// vector is supported in the Lambda^2 z mask.
bool invariants_equal_lambda2z(const TwoStepAlgebra& a);

struct InvariantReport {
  int dim_invariants = 0;
  int dim_lambda2z = 0;
  bool equal = false;
  std::vector<std::vector<Rational>> basis;  // flat Lambda^2 coordinates
};

InvariantReport invariant_report(const TwoStepAlgebra& a);

}  // namespace graphbialg
