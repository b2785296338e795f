#include "graphbialg/classify.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace graphbialg {

SolutionSpace lambda_system(const Graph& g) {
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  const std::size_t unknowns = static_cast<std::size_t>(nv) * ne;
  std::vector<std::vector<Rational>> rows;
  for (int e0 = 0; e0 < ne; ++e0) {
    auto [i, j] = g.edges()[static_cast<std::size_t>(e0)];
    for (int e = 0; e < ne; ++e) {
      if (e == e0) continue;
      std::vector<Rational> row(unknowns);
      row[static_cast<std::size_t>(lambda_index(g, i, e))] = Rational(1);
      row[static_cast<std::size_t>(lambda_index(g, j, e))] = Rational(1);
      rows.push_back(std::move(row));
    }
  }
  Mat m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c)
      if (!rows[r][c].is_zero()) m.at(r, c) = rows[r][c];
  return nullspace(m);
}

bool path_parity_zero(const Graph& g, int v, int e) {
  SolutionSpace sp = lambda_system(g);
  const std::size_t u = static_cast<std::size_t>(lambda_index(g, v, e));
  for (const auto& vec : sp.basis)
    if (!vec[u].is_zero()) return false;
  return true;
}

bool parity_certificate(const Graph& g, int v, int e) {
  // 2-color the component of v in G - e; a conflict means an odd closed
  // walk through v exists
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> bfs;
  color[static_cast<std::size_t>(v)] = 0;
  bfs.push(v);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int ei : g.incident_edges(u)) {
      if (ei == e) continue;
      auto [x, y] = g.edges()[static_cast<std::size_t>(ei)];
      int other = x == u ? y : x;
      if (color[static_cast<std::size_t>(other)] == -1) {
        color[static_cast<std::size_t>(other)] =
            1 - color[static_cast<std::size_t>(u)];
        bfs.push(other);
      } else if (color[static_cast<std::size_t>(other)] ==
                 color[static_cast<std::size_t>(u)]) {
        return true;
      }
    }
  }
  return false;
}

DiagonalFamily DiagonalFamily::zero(const Graph& g) {
  DiagonalFamily fam{g, Mat(static_cast<std::size_t>(g.vertex_count()),
                            static_cast<std::size_t>(g.edge_count())),
                     {}};
  std::size_t d2z =
      static_cast<std::size_t>(g.edge_count()) * (g.edge_count() - 1) / 2;
  fam.omega.assign(static_cast<std::size_t>(g.vertex_count()),
                   std::vector<Rational>(d2z));
  return fam;
}

std::vector<Rational> DiagonalFamily::a_vector(int v) const {
  std::vector<Rational> a(static_cast<std::size_t>(graph.edge_count()));
  for (int e = 0; e < graph.edge_count(); ++e)
    a[static_cast<std::size_t>(e)] =
        lambda.at(static_cast<std::size_t>(v), static_cast<std::size_t>(e));
  return a;
}

Cobracket assemble_diagonal(const DiagonalFamily& fam) {
  TwoStepAlgebra alg = TwoStepAlgebra::from_graph(fam.graph);
  ConstructionData data = ConstructionData::zero(alg);
  for (int e = 0; e < fam.graph.edge_count(); ++e)
    for (int v = 0; v < fam.graph.vertex_count(); ++v)
      data.d_family[static_cast<std::size_t>(e)].at(
          static_cast<std::size_t>(v), static_cast<std::size_t>(v)) =
          fam.lambda.at(static_cast<std::size_t>(v),
                        static_cast<std::size_t>(e));
  data.phi_star = fam.omega;
  return build_from_data(alg, data);
}

OmegaReport omega_constraints(const DiagonalFamily& fam) {
  OmegaReport rep;
  ExteriorIndex zidx(std::max(fam.graph.edge_count(), 1));
  for (int v = 0; v < fam.graph.vertex_count(); ++v) {
    ExtVector om(2, static_cast<std::size_t>(zidx.dim2()));
    om.coeff = fam.omega[static_cast<std::size_t>(v)];
    ExtVector av(1, static_cast<std::size_t>(zidx.n()));
    av.coeff = fam.a_vector(v);
    ExtVector res = wedge(om, av, zidx);
    if (!res.is_zero()) rep.pass = false;
    rep.residuals.push_back(std::move(res.coeff));
  }
  return rep;
}

bool commuting_d_check(const Cobracket& d) {
  if (!is_nearly_coboundary(d))
    throw std::invalid_argument(
        "commuting_d_check: cobracket is not nearly coboundary");
  std::vector<Mat> family = read_d_family(d);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!(family[i] * family[j] == family[j] * family[i])) return false;
  return true;
}

std::vector<TableRow> parameter_table(int max_n) {
  if (max_n < 3) throw std::invalid_argument("parameter_table: need n >= 3");
  std::vector<TableRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    Graph cn = Graph::cycle(n);
    Graph kn = Graph::complete(n);
    auto count_r = [](const Graph& g) {
      return static_cast<long long>(g.vertex_count()) * g.edge_count();
    };
    auto count_omega = [](const Graph& g) {
      return static_cast<long long>(g.vertex_count()) * g.edge_count() *
             (g.edge_count() - 1) / 2;
    };
    TableRow row{n, count_r(cn), count_omega(cn), count_r(kn),
                 count_omega(kn)};
    long long nn = n;
    if (row.cycle_r != nn * nn || row.cycle_omega != nn * nn * (nn - 1) / 2 ||
        row.complete_r != nn * nn * (nn - 1) / 2 ||
        row.complete_omega != nn * nn * (nn + 1) * (nn - 1) * (nn - 2) / 8)
      throw std::logic_error("parameter_table: closed-form check failed");
    rows.push_back(row);
  }
  return rows;
}

namespace {

// canonical K_3 edge order: 0 = (1,2), 1 = (1,3), 2 = (2,3)
constexpr int kEdge12 = 0;
constexpr int kEdge13 = 1;
constexpr int kEdge23 = 2;

std::vector<Rational> z_vector(const Rational& on12, const Rational& on13,
                               const Rational& on23) {
  return {on12, on13, on23};
}

}  // namespace

F3Family F3Family::zero(Case kind) {
  F3Family fam;
  fam.kind = kind;
  if (kind == Case::I) fam.lambda_prime = Rational(1);  // lambda != lambda'
  for (auto& om : fam.omega) om.assign(3, Rational());
  return fam;
}

std::array<Mat, 3> F3Family::d_matrices() const {
  auto upper = [](std::array<Rational, 6> e) {
    // entries (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
    Mat m(3, 3);
    m.at(0, 0) = e[0];
    m.at(0, 1) = e[1];
    m.at(0, 2) = e[2];
    m.at(1, 1) = e[3];
    m.at(1, 2) = e[4];
    m.at(2, 2) = e[5];
    return m;
  };
  Rational one(1);
  Mat d12, d13, d23;
  switch (kind) {
    case Case::I:
      d12 = upper({lambda, one, {}, lambda, {}, lambda_prime});
      d23 = upper({a, b, {}, a, {}, c});
      d13 = upper({mu, nu, {}, mu, {}, tau});
      break;
    case Case::II:
      d12 = upper({lambda, one, {}, lambda, one, lambda});
      d23 = upper({a, b, c, a, b, a});
      d13 = upper({mu, nu, rho, mu, nu, mu});
      break;
    case Case::III:
      d12 = upper({lambda, one, {}, lambda, {}, lambda});
      d23 = upper({a, b, c, a, {}, a});
      d13 = upper({mu, nu, rho, mu, {}, mu});
      break;
  }
  std::array<Mat, 3> out;
  out[static_cast<std::size_t>(kEdge12)] = std::move(d12);
  out[static_cast<std::size_t>(kEdge13)] = std::move(d13);
  out[static_cast<std::size_t>(kEdge23)] = std::move(d23);
  return out;
}

std::vector<Rational> F3Family::elem_a() const { return z_vector(lambda, mu, a); }
std::vector<Rational> F3Family::elem_b() const {
  return z_vector(Rational(1), nu, b);
}
std::vector<Rational> F3Family::elem_c() const { return z_vector({}, rho, c); }
std::vector<Rational> F3Family::elem_d() const {
  return z_vector(lambda_prime, tau, c);
}

Cobracket f3_build(const F3Family& fam) {
  if (fam.kind == F3Family::Case::I && fam.lambda == fam.lambda_prime)
    throw std::invalid_argument("f3_build: case I requires lambda != lambda'");
  Graph k3 = Graph::complete(3);
  TwoStepAlgebra alg = TwoStepAlgebra::from_graph(k3);
  ConstructionData data = ConstructionData::zero(alg);
  auto mats = fam.d_matrices();
  for (int e = 0; e < 3; ++e)
    data.d_family[static_cast<std::size_t>(e)] = mats[static_cast<std::size_t>(e)];
  for (int v = 0; v < 3; ++v)
    data.phi_star[static_cast<std::size_t>(v)] =
        fam.omega[static_cast<std::size_t>(v)];
  Cobracket d = build_from_data(alg, data);

  // assert the displayed closed forms
  auto closed_column = [&](int v, const std::vector<Rational>& head,
                           const std::vector<Rational>& mid1,
                           const std::vector<Rational>& mid2) {
    // e_{v+1} ^ head + e_v ^ mid1 + e_1 ^ mid2 + omega_v, with z-vectors
    ExtVector col(2, static_cast<std::size_t>(d.index().dim2()));
    auto add = [&](int wv, const std::vector<Rational>& zvec) {
      for (int e = 0; e < 3; ++e)
        if (!zvec[static_cast<std::size_t>(e)].is_zero())
          col.coeff[static_cast<std::size_t>(d.index().pair_index(wv, 3 + e))] +=
              zvec[static_cast<std::size_t>(e)];
    };
    add(v, head);
    if (!mid1.empty()) add(v - 1, mid1);
    if (!mid2.empty()) add(0, mid2);
    ExteriorIndex zidx(3);
    for (int t = 0; t < zidx.dim2(); ++t) {
      const Rational& c =
          fam.omega[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
      if (c.is_zero()) continue;
      auto [za, zb] = zidx.pair_at(t);
      col.coeff[static_cast<std::size_t>(d.index().pair_index(3 + za, 3 + zb))] +=
          c;
    }
    return col;
  };
  std::vector<Rational> none;
  bool ok = d.column(0) == closed_column(0, fam.elem_a(), none, none) &&
            d.column(1) == closed_column(1, fam.elem_a(), fam.elem_b(), none);
  ExtVector col3;
  switch (fam.kind) {
    case F3Family::Case::I:
      col3 = closed_column(2, fam.elem_d(), none, none);
      break;
    case F3Family::Case::II:
      col3 = closed_column(2, fam.elem_a(), fam.elem_b(), fam.elem_c());
      break;
    case F3Family::Case::III:
      col3 = closed_column(2, fam.elem_a(), none, fam.elem_c());
      break;
  }
  ok = ok && d.column(2) == col3;
  if (!ok)
    throw std::logic_error("f3_build: assembled columns differ from closed forms");
  return d;
}

F3Report f3_residuals(const F3Family& fam) {
  F3Report rep;
  ExteriorIndex zidx(3);
  auto wedge3 = [&](const std::vector<Rational>& om,
                    const std::vector<Rational>& zv) {
    ExtVector a(2, static_cast<std::size_t>(zidx.dim2()));
    a.coeff = om;
    ExtVector b(1, 3);
    b.coeff = zv;
    return wedge(a, b, zidx).coeff[0];  // Lambda^3 of a 3-dim space is a line
  };
  const auto& om1 = fam.omega[0];
  const auto& om2 = fam.omega[1];
  const auto& om3 = fam.omega[2];
  rep.residuals[0] = wedge3(om1, fam.elem_a());
  rep.residuals[1] = wedge3(om2, fam.elem_a()) + wedge3(om1, fam.elem_b());
  switch (fam.kind) {
    case F3Family::Case::I:
      rep.residuals[2] = wedge3(om3, fam.elem_d());
      break;
    case F3Family::Case::II:
      rep.residuals[2] = wedge3(om3, fam.elem_a()) + wedge3(om2, fam.elem_b()) +
                         wedge3(om1, fam.elem_c());
      break;
    case F3Family::Case::III:
      rep.residuals[2] = wedge3(om3, fam.elem_a()) + wedge3(om1, fam.elem_c());
      break;
  }
  for (const auto& r : rep.residuals)
    if (!r.is_zero()) rep.pass = false;
  return rep;
}

ClassifyReport classify_diagonal(const Graph& g) {
  ClassifyReport rep;
  rep.lambda_basis = lambda_system(g);
  rep.lambda_dim = static_cast<int>(rep.lambda_basis.dimension());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int e = 0; e < g.edge_count(); ++e) {
      bool zero = true;
      for (const auto& vec : rep.lambda_basis.basis)
        if (!vec[static_cast<std::size_t>(lambda_index(g, v, e))].is_zero())
          zero = false;
      if (zero) rep.forced_zero_lambdas.emplace_back(v, e);
    }
  rep.omega_free_parameters = static_cast<long long>(g.vertex_count()) *
                              g.edge_count() * (g.edge_count() - 1) / 2;
  if (!g.min_degree_at_least_two())
    rep.caveats.push_back(
        "graph has a vertex of degree < 2: the structure theorems do not "
        "apply, cobrackets need not have the restricted shape");
  return rep;
}

}  // namespace graphbialg
