#pragma once

#include <utility>
#include <vector>

#include "graphbialg/algebra.hpp"
#include "graphbialg/graph.hpp"
#include "graphbialg/matrix.hpp"

namespace graphbialg {

// Linear system T_i S T_k + T_k S T_i = 0 (all pairs i <= k over the center
// basis) in the unknown antisymmetric S : W* -> W. Unknowns are the entries
// s_{pq}, p < q, ordered lexicographically; each left-hand side is itself
// antisymmetric, so only the entries above the diagonal are kept as rows.
struct TstSystem {
  int dim_w = 0;
  int dim_z = 0;
  std::vector<std::pair<int, int>> unknowns;  // (p,q), p < q
  Mat coeff;  // C(dim_z+1,2)*C(dim_w,2) rows, C(dim_w,2) columns
};

TstSystem assemble_tst(const TwoStepAlgebra& a);

struct TstSolution {
  SolutionSpace space;             // coordinates over the s_{pq} unknowns
  std::vector<Mat> basis_matrices; // reassembled antisymmetric matrices
};

// Nullspace of the assembled system. Every basis matrix is re-verified to
// satisfy all pair equations by direct multiplication (std::logic_error on
// failure, which would be a solver bug).
TstSolution solve_tst(const TwoStepAlgebra& a);

bool is_tst_type(const TwoStepAlgebra& a);

struct ZeroPatternReport {
  bool tst_type = false;
  int solution_dim = 0;
  std::vector<Mat> basis;
  std::vector<std::pair<int, int>> predicted;  // 0-based vertex pairs
  // (vertex pair, basis matrix index) with a nonzero predicted-zero entry;
  // the zero-pattern theorem says this must stay empty
  std::vector<std::pair<std::pair<int, int>, int>> violations;

  bool pass() const { return violations.empty(); }
};

ZeroPatternReport crosscheck_zero_pattern(const Graph& g);

}  // namespace graphbialg
