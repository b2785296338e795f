#include "graphbialg/tst.hpp"

#include <stdexcept>

namespace graphbialg {

TstSystem assemble_tst(const TwoStepAlgebra& a) {
  TstSystem sys;
  sys.dim_w = a.dim_w();
  sys.dim_z = a.dim_z();
  const int w = sys.dim_w;
  for (int p = 0; p < w; ++p)
    for (int q = p + 1; q < w; ++q) sys.unknowns.emplace_back(p, q);
  const std::size_t n_unknowns = sys.unknowns.size();
  const std::size_t n_rows = static_cast<std::size_t>(sys.dim_z) *
                             (sys.dim_z + 1) / 2 * n_unknowns;
  sys.coeff = Mat(n_rows, n_unknowns);
  std::size_t row = 0;
  for (int i = 0; i < sys.dim_z; ++i) {
    const Mat& ti = a.t_tensor(i);
    for (int k = i; k < sys.dim_z; ++k) {
      const Mat& tk = a.t_tensor(k);
      // entry (r,c), r < c, of T_i S T_k + T_k S T_i as a linear form in the
      // unknowns: the contribution of s_{pq} is
      //   T_i[r][p] T_k[q][c] - T_i[r][q] T_k[p][c]
      // + T_k[r][p] T_i[q][c] - T_k[r][q] T_i[p][c]
      for (int r = 0; r < w; ++r) {
        for (int c = r + 1; c < w; ++c) {
          for (std::size_t u = 0; u < n_unknowns; ++u) {
            auto [p, q] = sys.unknowns[u];
            Rational v =
                ti.at(static_cast<std::size_t>(r), static_cast<std::size_t>(p)) *
                    tk.at(static_cast<std::size_t>(q), static_cast<std::size_t>(c)) -
                ti.at(static_cast<std::size_t>(r), static_cast<std::size_t>(q)) *
                    tk.at(static_cast<std::size_t>(p), static_cast<std::size_t>(c)) +
                tk.at(static_cast<std::size_t>(r), static_cast<std::size_t>(p)) *
                    ti.at(static_cast<std::size_t>(q), static_cast<std::size_t>(c)) -
                tk.at(static_cast<std::size_t>(r), static_cast<std::size_t>(q)) *
                    ti.at(static_cast<std::size_t>(p), static_cast<std::size_t>(c));
            if (!v.is_zero()) sys.coeff.at(row, u) = std::move(v);
          }
          ++row;
        }
      }
    }
  }
  return sys;
}

TstSolution solve_tst(const TwoStepAlgebra& a) {
  TstSystem sys = assemble_tst(a);
  TstSolution sol;
  sol.space = nullspace(sys.coeff);
  const int w = sys.dim_w;
  for (const auto& v : sol.space.basis) {
    Mat s(static_cast<std::size_t>(w), static_cast<std::size_t>(w));
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
      auto [p, q] = sys.unknowns[u];
      s.at(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = v[u];
      s.at(static_cast<std::size_t>(q), static_cast<std::size_t>(p)) = -v[u];
    }
    for (int i = 0; i < sys.dim_z; ++i) {
      for (int k = i; k < sys.dim_z; ++k) {
        const Mat& ti = a.t_tensor(i);
        const Mat& tk = a.t_tensor(k);
        if (!(ti * s * tk + tk * s * ti).is_zero())
          throw std::logic_error("solve_tst: basis matrix failed TST equation");
      }
    }
    sol.basis_matrices.push_back(std::move(s));
  }
  return sol;
}

bool is_tst_type(const TwoStepAlgebra& a) {
  return solve_tst(a).space.dimension() == 0;
}

ZeroPatternReport crosscheck_zero_pattern(const Graph& g) {
  ZeroPatternReport rep;
  TwoStepAlgebra a = TwoStepAlgebra::from_graph(g);
  TstSolution sol = solve_tst(a);
  rep.solution_dim = static_cast<int>(sol.space.dimension());
  rep.tst_type = rep.solution_dim == 0;
  rep.basis = std::move(sol.basis_matrices);
  rep.predicted = g.predicted_s_zero_pattern();
  for (const auto& [i, j] : rep.predicted)
    for (std::size_t b = 0; b < rep.basis.size(); ++b)
      if (!rep.basis[b]
               .at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
               .is_zero())
        rep.violations.push_back({{i, j}, static_cast<int>(b)});
  return rep;
}

}  // namespace graphbialg
