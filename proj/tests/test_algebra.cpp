#include <doctest.h>

#include "graphbialg/algebra.hpp"
#include "graphbialg/sweep.hpp"
#include "test_util.hpp"

using namespace graphbialg;

namespace {

Element lin(const TwoStepAlgebra& a, std::vector<long long> w,
            std::vector<long long> z = {}) {
  Element e = a.zero_element();
  for (std::size_t i = 0; i < w.size(); ++i) e.w[i] = Rational(w[i]);
  for (std::size_t i = 0; i < z.size(); ++i) e.z[i] = Rational(z[i]);
  return e;
}

}  // namespace

TEST_CASE("from_graph on the single edge gives h3") {
  TwoStepAlgebra a = TwoStepAlgebra::from_graph(Graph::parse("2\n1 2\n"));
  CHECK(a.dim_w() == 2);
  CHECK(a.dim_z() == 1);
  Element br = a.bracket(a.w_basis(0), a.w_basis(1));
  CHECK(br.z[0] == Rational(1));
  CHECK(a.bracket(a.w_basis(1), a.w_basis(0)).z[0] == Rational(-1));
  // everything else vanishes
  CHECK(a.bracket(a.w_basis(0), a.z_basis(0)).is_zero());
  CHECK(a.basis_name(0) == "v1");
  CHECK(a.basis_name(2) == "a1_2");
}

TEST_CASE("from_graph on K3 and the 4-vertex example") {
  TwoStepAlgebra f3 = TwoStepAlgebra::from_graph(Graph::complete(3));
  CHECK(f3.dim_w() == 3);
  CHECK(f3.dim_z() == 3);

  // edges sorted (1,2),(1,3),(2,3),(3,4)
  Graph g = Graph::parse("4\n1 2\n1 3\n2 3\n4 3\n");
  TwoStepAlgebra a = TwoStepAlgebra::from_graph(g);
  CHECK(a.bracket(a.w_basis(0), a.w_basis(1)).z ==
        std::vector<Rational>{1, 0, 0, 0});
  CHECK(a.bracket(a.w_basis(0), a.w_basis(2)).z ==
        std::vector<Rational>{0, 1, 0, 0});
  CHECK(a.bracket(a.w_basis(1), a.w_basis(2)).z ==
        std::vector<Rational>{0, 0, 1, 0});
  // [e4,e3] is the canonical edge (3,4) with flipped orientation
  CHECK(a.bracket(a.w_basis(3), a.w_basis(2)).z ==
        std::vector<Rational>{0, 0, 0, -1});
}

TEST_CASE("bracket is bilinear in the graph algebra") {
  TwoStepAlgebra f3 = TwoStepAlgebra::from_graph(Graph::complete(3));
  // [e1+e2, e3] = a1_3 + a2_3
  Element x = lin(f3, {1, 1, 0});
  CHECK(f3.bracket(x, f3.w_basis(2)).z == std::vector<Rational>{0, 1, 1});
}

TEST_CASE("heisenberg") {
  TwoStepAlgebra h1 = TwoStepAlgebra::heisenberg(1);
  TwoStepAlgebra edge = TwoStepAlgebra::from_graph(Graph::parse("2\n1 2\n"));
  CHECK(h1.t_tensor(0) == edge.t_tensor(0));

  TwoStepAlgebra h2 = TwoStepAlgebra::heisenberg(2);
  CHECK(h2.dim_w() == 4);
  CHECK(h2.dim_z() == 1);
  CHECK(rank(h2.t_tensor(0)) == 4);  // nondegenerate symplectic form

  for (int m : {1, 2, 3}) {
    TwoStepAlgebra h = TwoStepAlgebra::heisenberg(m);
    CHECK((h.t_tensor(0) + h.t_tensor(0).transpose()).is_zero());
  }
  CHECK_THROWS_AS(TwoStepAlgebra::heisenberg(0), std::invalid_argument);
}

TEST_CASE("bracket antisymmetry and the 2-step law on random elements") {
  testutil::Rng rng(42);
  for (const Graph& g :
       {Graph::complete(4), Graph::path(4), Graph::cycle(5)}) {
    TwoStepAlgebra a = TwoStepAlgebra::from_graph(g);
    for (int iter = 0; iter < 20; ++iter) {
      Element x = a.zero_element(), y = a.zero_element(), w = a.zero_element();
      for (int i = 0; i < a.dim_w(); ++i) {
        x.w[static_cast<std::size_t>(i)] = rng.rational();
        y.w[static_cast<std::size_t>(i)] = rng.rational();
        w.w[static_cast<std::size_t>(i)] = rng.rational();
      }
      for (int i = 0; i < a.dim_z(); ++i)
        x.z[static_cast<std::size_t>(i)] = rng.rational();
      Element xy = a.bracket(x, y);
      Element yx = a.bracket(y, x);
      yx.scale(Rational(-1));
      CHECK(xy == yx);
      CHECK(a.bracket(x, x).is_zero());
      CHECK(a.bracket(x, a.bracket(y, w)).is_zero());
    }
  }
}

TEST_CASE("check_algebra accepts graph algebras and heisenberg") {
  CHECK(check_algebra(TwoStepAlgebra::from_graph(Graph::complete(3))).pass());
  CHECK(check_algebra(TwoStepAlgebra::heisenberg(3)).pass());
}

TEST_CASE("check_algebra flags a non-antisymmetric tensor") {
  Mat bad(2, 2);
  bad.at(0, 1) = Rational(1);  // E_12, not antisymmetric
  AlgebraCheckReport rep =
      check_algebra(TwoStepAlgebra::from_tensors(2, {bad}));
  CHECK_FALSE(rep.antisymmetry_ok);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("check_algebra passes on every graph algebra up to 6 vertices") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      CHECK(check_algebra(TwoStepAlgebra::from_graph(g)).pass());
}

TEST_CASE("element and bracket size validation") {
  TwoStepAlgebra a = TwoStepAlgebra::from_graph(Graph::complete(3));
  TwoStepAlgebra b = TwoStepAlgebra::from_graph(Graph::path(3));
  CHECK_THROWS_AS(a.bracket(a.w_basis(0), b.w_basis(0)),
                  std::invalid_argument);
}
