#include <doctest.h>

#include "graphbialg/report_json.hpp"

using namespace graphbialg;

TEST_CASE("graph json round trip") {
  Graph g = Graph::parse("4\n1 2\n1 3\n2 3\n3 4\n");
  json j = graph_to_json(g);
  CHECK(j["vertices"] == 4);
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(json::object()), JsonSchemaError);
  CHECK_THROWS_AS(graph_from_json(json::parse(
                      R"({"vertices": 2, "edges": [[1,1]]})")),
                  JsonSchemaError);
}

TEST_CASE("cobracket document parsing") {
  json doc = json::parse(R"({
    "algebra": {"graph": {"vertices": 2, "edges": [[1, 2]]}},
    "columns": {
      "v2": [{"basis": ["v1", "v2"], "coeff": "1"}],
      "a1_2": [{"basis": ["v1", "a1_2"], "coeff": "1"}]
    }
  })");
  CobracketDoc parsed = cobracket_from_json(doc);
  CHECK(parsed.graph.has_value());
  const Cobracket& d = parsed.cobracket;
  CHECK(d.algebra().dim() == 3);
  CHECK(d.column(0).is_zero());
  CHECK(d.column(1).coeff[0] == Rational(1));
  CHECK(is_bialgebra(d));
}

TEST_CASE("cobracket document schema errors") {
  auto parse = [](const char* text) {
    return cobracket_from_json(json::parse(text));
  };
  // unknown basis name
  CHECK_THROWS_AS(parse(R"({"algebra": {"graph": {"vertices":2,"edges":[[1,2]]}},
    "columns": {"v9": []}})"),
                  JsonSchemaError);
  // unsorted tuple
  CHECK_THROWS_AS(parse(R"({"algebra": {"graph": {"vertices":2,"edges":[[1,2]]}},
    "columns": {"v1": [{"basis": ["v2","v1"], "coeff": "1"}]}})"),
                  JsonSchemaError);
  // corrupted coefficient 1/0
  CHECK_THROWS_AS(parse(R"({"algebra": {"graph": {"vertices":2,"edges":[[1,2]]}},
    "columns": {"v1": [{"basis": ["v1","v2"], "coeff": "1/0"}]}})"),
                  JsonSchemaError);
  // missing pieces
  CHECK_THROWS_AS(parse(R"({"columns": {}})"), JsonSchemaError);
}

TEST_CASE("tensor-algebra documents") {
  json doc = json::parse(R"({
    "algebra": {"dim_w": 2, "tensors": [[["0", "-1"], ["1", "0"]]]},
    "columns": {"v2": [{"basis": ["v1", "v2"], "coeff": "1/2"}]}
  })");
  CobracketDoc parsed = cobracket_from_json(doc);
  CHECK_FALSE(parsed.graph.has_value());
  CHECK(parsed.cobracket.algebra().dim_w() == 2);
  CHECK(parsed.cobracket.algebra().dim_z() == 1);
  CHECK(parsed.cobracket.algebra().basis_name(2) == "z1");
  // round trip through the serializer
  json out = cobracket_to_json(parsed.cobracket, parsed.graph);
  CobracketDoc again = cobracket_from_json(out);
  for (int i = 0; i < 3; ++i)
    CHECK(again.cobracket.column(i) == parsed.cobracket.column(i));
}

TEST_CASE("cobracket serialization round trip and determinism") {
  TwoStepAlgebra k3 = TwoStepAlgebra::from_graph(Graph::complete(3));
  Cobracket d(k3);
  d.add_term(0, 0, 3, Rational(1));
  d.add_term(0, 0, 4, Rational(-2, 3));
  d.add_term(2, 4, 5, Rational(7));
  std::optional<Graph> g = Graph::complete(3);
  json j1 = cobracket_to_json(d, g);
  json j2 = cobracket_to_json(d, g);
  CHECK(j1.dump() == j2.dump());
  CobracketDoc parsed = cobracket_from_json(j1);
  for (int i = 0; i < k3.dim(); ++i)
    CHECK(parsed.cobracket.column(i) == d.column(i));
}

TEST_CASE("report builders are deterministic") {
  Graph g = Graph::path(3);
  CHECK(invariants_report_json(g).dump() == invariants_report_json(g).dump());
  CHECK(tst_report_json(g).dump() == tst_report_json(g).dump());
  CHECK(classify_report_json(g).dump() == classify_report_json(g).dump());
  CHECK(table_report_json(6).dump() == table_report_json(6).dump());
}

TEST_CASE("report fields match the computed values") {
  json inv = invariants_report_json(Graph::path(3));
  CHECK(inv["dim_invariants"] == 4);
  CHECK(inv["dim_lambda2z"] == 1);
  CHECK(inv["equal"] == false);
  CHECK(inv["valency_theorem_consistent"] == true);

  json tst = tst_report_json(Graph::path(3));
  CHECK(tst["solution_dim"] == 1);
  CHECK(tst["tst_type"] == false);
  CHECK(tst["zero_pattern_violations"].empty());

  json cls = classify_report_json(Graph::complete(4));
  CHECK(cls["lambda_dim"] == 0);
  CHECK(cls["omega_free_parameters"] == 60);

  json table = table_report_json(4);
  CHECK(table["rows"][1]["complete_omega_params"] == 60);
}
