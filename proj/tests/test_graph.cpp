#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphbialg/graph.hpp"
#include "graphbialg/sweep.hpp"

using graphbialg::Graph;
using graphbialg::GraphError;

TEST_CASE("parse canonical graphs") {
  Graph k3 = Graph::parse("3\n1 2\n2 3\n1 3\n");
  CHECK(k3 == Graph::complete(3));
  CHECK(k3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  Graph h3 = Graph::parse("2\n1 2\n");
  CHECK(h3.vertex_count() == 2);
  CHECK(h3.edge_count() == 1);

  Graph commented = Graph::parse("# a triangle\n3\n# edges\n3 1\n1 2\n2 3\n");
  CHECK(commented == k3);
}

TEST_CASE("parse errors carry line numbers") {
  // (2,1) is the same edge as (1,2) after canonical orientation
  CHECK_THROWS_WITH_AS(Graph::parse("3\n1 2\n2 1\n"),
                       "line 3: duplicate edge", GraphError);
  CHECK_THROWS_WITH_AS(Graph::parse("3\n1 1\n"), "line 2: loop edge",
                       GraphError);
  CHECK_THROWS_WITH_AS(Graph::parse("3\n1 4\n"),
                       "line 2: vertex index out of range", GraphError);
  CHECK_THROWS_AS(Graph::parse("3\n1 2 junk\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("3\nnot an edge\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse(""), GraphError);
  CHECK_THROWS_AS(Graph::parse("# only comments\n"), GraphError);
}

TEST_CASE("isolated vertices are a hard error") {
  CHECK_THROWS_WITH_AS(Graph::parse("3\n1 2\n"), "line 2: isolated vertex 3",
                       GraphError);
  CHECK_THROWS_AS(Graph(4, {{0, 1}}), GraphError);
}

TEST_CASE("degrees") {
  Graph k3 = Graph::complete(3);
  for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);
  Graph p3 = Graph::path(3);
  CHECK(p3.degree(0) == 1);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.degree(2) == 1);
  CHECK_THROWS_AS(p3.degree(3), GraphError);
  CHECK(k3.min_degree_at_least_two());
  CHECK_FALSE(Graph::parse("2\n1 2\n").min_degree_at_least_two());
  CHECK_FALSE(p3.min_degree_at_least_two());
}

TEST_CASE("degree sum equals twice the edge count") {
  for (const Graph& g : graphbialg::enumerate_graphs(5)) {
    int sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("predicted S zero pattern") {
  auto as_set = [](const std::vector<std::pair<int, int>>& v) {
    return std::set<std::pair<int, int>>(v.begin(), v.end());
  };
  // K3: every pair is joined by an edge
  CHECK(as_set(Graph::complete(3).predicted_s_zero_pattern()) ==
        std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  // path 1-2-3: (1,3) is absent because its candidate edges share vertex 2
  CHECK(as_set(Graph::path(3).predicted_s_zero_pattern()) ==
        std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
  // K4: condition 1 covers every pair
  CHECK(Graph::complete(4).predicted_s_zero_pattern().size() == 6);
  // two disjoint edges: condition 2 covers the four cross pairs
  Graph disjoint(4, {{0, 1}, {2, 3}});
  CHECK(as_set(disjoint.predicted_s_zero_pattern()) ==
        std::set<std::pair<int, int>>{
            {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("min degree >= 2 makes the predicted pattern complete") {
  // exhaustive over all labeled graphs on up to 6 vertices
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    for (std::uint32_t mask = 1; mask < (1u << all_edges.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (std::size_t e = 0; e < all_edges.size(); ++e)
        if (mask & (1u << e)) {
          edges.push_back(all_edges[e]);
          ++deg[static_cast<std::size_t>(all_edges[e].first)];
          ++deg[static_cast<std::size_t>(all_edges[e].second)];
        }
      if (std::find(deg.begin(), deg.end(), 0) != deg.end()) continue;
      Graph g(n, edges);
      if (!g.min_degree_at_least_two()) continue;
      CHECK(g.predicted_s_zero_pattern().size() ==
            static_cast<std::size_t>(n) * (n - 1) / 2);
    }
  }
}

TEST_CASE("serialize emits canonical form, parse inverts it") {
  Graph g = Graph::parse("4\n# comment\n3 1\n1 2\n2 3\n4 3\n");
  CHECK(g.serialize() == "4\n1 2\n1 3\n2 3\n3 4\n");
  CHECK(Graph::parse(g.serialize()) == g);
  for (const Graph& h : graphbialg::enumerate_graphs(5))
    CHECK(Graph::parse(h.serialize()) == h);
}

TEST_CASE("names") {
  Graph g = Graph::path(3);
  CHECK(g.vertex_name(0) == "v1");
  CHECK(g.edge_name(0) == "a1_2");
  CHECK(g.edge_name(1) == "a2_3");
}
