#include "graphbialg/report_json.hpp"

#include <algorithm>

namespace graphbialg {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw JsonSchemaError("graph: expected {vertices, edges}");
  if (!j["vertices"].is_number_integer())
    throw JsonSchemaError("graph: vertices must be an integer");
  int n = j["vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw JsonSchemaError("graph: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const GraphError& err) {
    throw JsonSchemaError(std::string("graph: ") + err.what());
  }
}

json ext_to_json(const ExtVector& v, const TwoStepAlgebra& a,
                 const ExteriorIndex& idx) {
  json terms = json::array();
  for (std::size_t i = 0; i < v.coeff.size(); ++i) {
    if (v.coeff[i].is_zero()) continue;
    json basis = json::array();
    if (v.grade == 1) {
      basis.push_back(a.basis_name(static_cast<int>(i)));
    } else if (v.grade == 2) {
      auto [p, q] = idx.pair_at(static_cast<int>(i));
      basis.push_back(a.basis_name(p));
      basis.push_back(a.basis_name(q));
    } else {
      const auto& t = idx.triple_at(static_cast<int>(i));
      for (int b : t) basis.push_back(a.basis_name(b));
    }
    terms.push_back({{"basis", basis}, {"coeff", v.coeff[i].to_string()}});
  }
  return terms;
}

namespace {

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw JsonSchemaError("coefficient must be a string");
  try {
    return Rational::from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonSchemaError(std::string("bad rational: ") + e.what());
  }
}

TwoStepAlgebra algebra_from_json(const json& j, std::optional<Graph>& graph) {
  if (!j.is_object()) throw JsonSchemaError("algebra: expected object");
  if (j.contains("graph")) {
    graph = graph_from_json(j["graph"]);
    return TwoStepAlgebra::from_graph(*graph);
  }
  if (!j.contains("dim_w") || !j.contains("tensors"))
    throw JsonSchemaError("algebra: expected graph or {dim_w, tensors}");
  int w = j["dim_w"].get<int>();
  std::vector<Mat> tensors;
  for (const auto& tj : j["tensors"]) {
    if (!tj.is_array() || tj.size() != static_cast<std::size_t>(w))
      throw JsonSchemaError("algebra: tensor must be a dim_w x dim_w array");
    Mat m(static_cast<std::size_t>(w), static_cast<std::size_t>(w));
    for (std::size_t r = 0; r < static_cast<std::size_t>(w); ++r) {
      if (!tj[r].is_array() || tj[r].size() != static_cast<std::size_t>(w))
        throw JsonSchemaError("algebra: tensor must be a dim_w x dim_w array");
      for (std::size_t c = 0; c < static_cast<std::size_t>(w); ++c)
        m.at(r, c) = rational_from_json(tj[r][c]);
    }
    tensors.push_back(std::move(m));
  }
  return TwoStepAlgebra::from_tensors(w, std::move(tensors));
}

}  // namespace

CobracketDoc cobracket_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("columns"))
    throw JsonSchemaError("cobracket: expected {algebra, columns}");
  std::optional<Graph> graph;
  TwoStepAlgebra alg = algebra_from_json(j["algebra"], graph);
  Cobracket d(alg);
  const ExteriorIndex& idx = d.index();
  if (!j["columns"].is_object())
    throw JsonSchemaError("cobracket: columns must be an object");
  for (const auto& [name, terms] : j["columns"].items()) {
    int g = alg.basis_index(name);
    if (g < 0) throw JsonSchemaError("cobracket: unknown basis name " + name);
    ExtVector col(2, static_cast<std::size_t>(idx.dim2()));
    if (!terms.is_array())
      throw JsonSchemaError("cobracket: column must be an array of terms");
    for (const auto& term : terms) {
      if (!term.is_object() || !term.contains("basis") || !term.contains("coeff"))
        throw JsonSchemaError("cobracket: term must be {basis, coeff}");
      const auto& basis = term["basis"];
      if (!basis.is_array() || basis.size() != 2)
        throw JsonSchemaError("cobracket: term basis must name two generators");
      int p = alg.basis_index(basis[0].get<std::string>());
      int q = alg.basis_index(basis[1].get<std::string>());
      if (p < 0 || q < 0)
        throw JsonSchemaError("cobracket: unknown basis name in term");
      if (p >= q)
        throw JsonSchemaError(
            "cobracket: term basis must be sorted and distinct");
      col.coeff[static_cast<std::size_t>(idx.pair_index(p, q))] +=
          rational_from_json(term["coeff"]);
    }
    d.set_column(g, std::move(col));
  }
  return {std::move(graph), std::move(d)};
}

json cobracket_to_json(const Cobracket& d, const std::optional<Graph>& g) {
  const TwoStepAlgebra& a = d.algebra();
  json alg;
  if (g) {
    alg = {{"graph", graph_to_json(*g)}};
  } else {
    json tensors = json::array();
    for (int i = 0; i < a.dim_z(); ++i) {
      json rows = json::array();
      for (std::size_t r = 0; r < static_cast<std::size_t>(a.dim_w()); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < static_cast<std::size_t>(a.dim_w()); ++c)
          row.push_back(a.t_tensor(i).at(r, c).to_string());
        rows.push_back(row);
      }
      tensors.push_back(rows);
    }
    alg = {{"dim_w", a.dim_w()}, {"tensors", tensors}};
  }
  json cols = json::object();
  for (int i = 0; i < a.dim(); ++i) {
    if (d.column(i).is_zero()) continue;
    cols[a.basis_name(i)] = ext_to_json(d.column(i), a, d.index());
  }
  return {{"algebra", alg}, {"columns", cols}};
}

json info_report(const Graph& g) {
  TwoStepAlgebra a = TwoStepAlgebra::from_graph(g);
  AlgebraCheckReport chk = check_algebra(a);
  json degrees = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
  return {{"graph", graph_to_json(g)},
          {"dim_w", a.dim_w()},
          {"dim_z", a.dim_z()},
          {"degrees", degrees},
          {"min_degree", g.min_degree()},
          {"algebra_check",
           {{"antisymmetry", chk.antisymmetry_ok},
            {"two_step", chk.two_step_ok},
            {"jacobi", chk.jacobi_ok},
            {"pass", chk.pass()}}}};
}

json invariants_report_json(const Graph& g) {
  TwoStepAlgebra a = TwoStepAlgebra::from_graph(g);
  ExteriorIndex idx(a.dim());
  InvariantReport rep = invariant_report(a);
  json basis = json::array();
  for (const auto& v : rep.basis) {
    ExtVector ev(2, v.size());
    ev.coeff = v;
    basis.push_back(ext_to_json(ev, a, idx));
  }
  bool theorem = rep.equal == g.min_degree_at_least_two();
  return {{"graph", graph_to_json(g)},
          {"dim_invariants", rep.dim_invariants},
          {"dim_lambda2z", rep.dim_lambda2z},
          {"equal", rep.equal},
          {"min_degree_at_least_two", g.min_degree_at_least_two()},
          {"valency_theorem_consistent", theorem},
          {"basis", basis}};
}

json tst_report_json(const Graph& g) {
  ZeroPatternReport rep = crosscheck_zero_pattern(g);
  json basis = json::array();
  for (const auto& m : rep.basis) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i + 1; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero())
          entries.push_back({{std::to_string(i + 1), std::to_string(j + 1)},
                             m.at(i, j).to_string()});
    basis.push_back(entries);
  }
  json violations = json::array();
  for (const auto& [pair, b] : rep.violations)
    violations.push_back({{"pair", {pair.first + 1, pair.second + 1}},
                          {"basis_index", b}});
  return {{"graph", graph_to_json(g)},
          {"tst_type", rep.tst_type},
          {"solution_dim", rep.solution_dim},
          {"basis", basis},
          {"zero_pattern_violations", violations}};
}

json verify_report_json(const CobracketDoc& doc) {
  const Cobracket& d = doc.cobracket;
  const TwoStepAlgebra& a = d.algebra();
  ResidualReport cj = check_cojacobi(d);
  ResidualReport cc = check_cocycle(d);
  bool bialgebra = cj.pass && cc.pass;
  auto offenders = [&](const ResidualReport& rep) {
    json out = json::array();
    for (const auto& [label, residual] : rep.offenders)
      out.push_back({{"generator", label},
                     {"residual", ext_to_json(residual, a, d.index())}});
    return out;
  };
  json rep = {{"cojacobi", {{"pass", cj.pass}, {"offenders", offenders(cj)}}},
              {"cocycle", {{"pass", cc.pass}, {"offenders", offenders(cc)}}},
              {"is_bialgebra", bialgebra},
              {"nearly_coboundary", is_nearly_coboundary(d)}};
  ContainmentReport cont = structural_containment(d);
  json cj2 = {{"hypotheses_hold", cont.hypotheses_ok}, {"pass", cont.pass}};
  if (!cont.hypotheses_ok)
    cj2["note"] = "hypotheses not satisfied, containment not guaranteed";
  json viols = json::array();
  for (const auto& [name, t] : cont.violations) {
    auto [p, q] = d.index().pair_at(t);
    viols.push_back(
        {{"column", name}, {"term", {a.basis_name(p), a.basis_name(q)}}});
  }
  cj2["violations"] = viols;
  rep["structural_containment"] = cj2;
  if (bialgebra) {
    Delta1Report d1 = delta1_cojacobi(d);
    rep["delta1_cojacobi"] = d1.pass;
  }
  return rep;
}

json classify_report_json(const Graph& g) {
  ClassifyReport rep = classify_diagonal(g);
  json basis = json::array();
  for (const auto& vec : rep.lambda_basis.basis) {
    json terms = json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int e = 0; e < g.edge_count(); ++e) {
        const Rational& c =
            vec[static_cast<std::size_t>(lambda_index(g, v, e))];
        if (!c.is_zero())
          terms.push_back({{"vertex", g.vertex_name(v)},
                           {"edge", g.edge_name(e)},
                           {"coeff", c.to_string()}});
      }
    basis.push_back(terms);
  }
  json forced = json::array();
  for (const auto& [v, e] : rep.forced_zero_lambdas)
    forced.push_back({g.vertex_name(v), g.edge_name(e)});
  return {{"graph", graph_to_json(g)},
          {"lambda_dim", rep.lambda_dim},
          {"lambda_basis", basis},
          {"forced_zero_lambdas", forced},
          {"omega_free_parameters", rep.omega_free_parameters},
          {"caveats", rep.caveats}};
}

json table_report_json(int max_n) {
  json rows = json::array();
  for (const auto& row : parameter_table(max_n))
    rows.push_back({{"n", row.n},
                    {"cycle_r_params", row.cycle_r},
                    {"cycle_omega_params", row.cycle_omega},
                    {"complete_r_params", row.complete_r},
                    {"complete_omega_params", row.complete_omega}});
  return {{"rows", rows}};
}

json sweep_report_json(const SweepSummary& s) {
  json graphs = json::array();
  for (const auto& r : s.results)
    graphs.push_back({{"graph", graph_to_json(r.graph)},
                      {"connected", r.connected},
                      {"min_degree_at_least_two", r.min_deg2},
                      {"invariants_equal_lambda2z", r.invariants_equal},
                      {"invariant_support_ok", r.invariant_support_ok},
                      {"tst_type", r.tst_type},
                      {"tst_dim", r.tst_dim},
                      {"zero_pattern_ok", r.zero_pattern_ok}});
  return {{"max_vertices", s.max_vertices},
          {"graphs_checked", s.graphs_checked},
          {"connected_count", s.connected_count},
          {"tst_type_count", s.tst_type_count},
          {"valency_violations", s.valency_violations},
          {"tst_violations", s.tst_violations},
          {"zero_pattern_violations", s.zero_pattern_violations},
          {"invariant_support_violations", s.invariant_support_violations},
          {"pass", s.pass()},
          {"graphs", graphs}};
}

}  // namespace graphbialg
