#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphbialg/cobracket.hpp"
#include "graphbialg/graph.hpp"

namespace graphbialg {

// Linear system for the eigenvalues of a diagonal D-family on a graph
// algebra: lambda_{i,a} + lambda_{j,a} = 0 for every edge (i,j) and every
// edge a distinct from it. Unknown order: lambda_{v,e} at index v*|A| + e.
SolutionSpace lambda_system(const Graph& g);

inline int lambda_index(const Graph& g, int v, int e) {
  return v * g.edge_count() + e;
}

// True iff the coordinate lambda_{v,e} vanishes on every basis vector of
// lambda_system(g). The linear system is the ground truth; the parity
// certificate below is a sufficient combinatorial criterion cross-checked
// against it.
bool path_parity_zero(const Graph& g, int v, int e);

// Odd closed walk through v avoiding edge e, i.e. the component of v in
// G - e is non-bipartite. Implies path_parity_zero.
bool parity_certificate(const Graph& g, int v, int e);

// Nearly-coboundary family with simultaneously diagonal D's: D_e(v) =
// lambda(v,e) * v, plus a Lambda^2 z part omega_v per vertex.
struct DiagonalFamily {
  Graph graph;
  Mat lambda;                                 // |V| x |A|
  std::vector<std::vector<Rational>> omega;   // per vertex, C(|A|,2) coords

  static DiagonalFamily zero(const Graph& g);
  // A_v = sum_e lambda(v,e) z_e
  std::vector<Rational> a_vector(int v) const;
};

Cobracket assemble_diagonal(const DiagonalFamily& fam);

struct OmegaReport {
  bool pass = true;
  // per-vertex residual omega_v ^ A_v over the Lambda^3 z basis
  std::vector<std::vector<Rational>> residuals;
};

OmegaReport omega_constraints(const DiagonalFamily& fam);

// All pairs of the D-family read off the W^z block commute. Input must be
// nearly coboundary (std::invalid_argument otherwise).
bool commuting_d_check(const Cobracket& d);

struct TableRow {
  int n;
  long long cycle_r;        // |V||A| for C_n
  long long cycle_omega;    // |V||A|(|A|-1)/2 for C_n
  long long complete_r;     // |V||A| for K_n
  long long complete_omega; // |V||A|(|A|-1)/2 for K_n
};

// Parameter counts per row computed from actually constructed graphs and
// verified against the closed forms n^2, n^2(n-1)/2, n^2(n-1)/2,
// n^2(n+1)(n-1)(n-2)/8 (std::logic_error on mismatch).
std::vector<TableRow> parameter_table(int max_n);

// Jordan-type families on the complete graph K_3. Edge order is canonical
// ((1,2),(1,3),(2,3)); the parameters named after the third edge attach to
// the canonical (1,3) edge, whose orientation is opposite to the customary
// picture, so signs of those parameters may differ from hand computations
// by a global flip.
struct F3Family {
  enum class Case { I, II, III };
  Case kind = Case::I;
  Rational lambda, lambda_prime, a, b, c, mu, nu, rho, tau;
  std::array<std::vector<Rational>, 3> omega;  // Lambda^2 z coords, size 3

  static F3Family zero(Case kind);
  std::array<Mat, 3> d_matrices() const;  // indexed by canonical edge
  // derived central elements as z-coordinate vectors
  std::vector<Rational> elem_a() const;
  std::vector<Rational> elem_b() const;
  std::vector<Rational> elem_c() const;
  std::vector<Rational> elem_d() const;
};

// delta(e_i) = sum_e D_e(e_i) ^ z_e + omega_i; asserts the assembled columns
// agree with the closed forms delta(e_1) = e_1 ^ A + w_1, delta(e_2) =
// e_2 ^ A + e_1 ^ B + w_2 and the per-case shape of delta(e_3).
// Case I requires lambda != lambda' (std::invalid_argument).
Cobracket f3_build(const F3Family& fam);

struct F3Report {
  bool pass = true;
  // coefficients of z_1 ^ z_2 ^ z_3 in the three wedge conditions
  std::array<Rational, 3> residuals;
};

// Evaluates w_1 ^ A, w_2 ^ A + w_1 ^ B and the case condition
// (I: w_3 ^ D; II: w_3 ^ A + w_2 ^ B + w_1 ^ C; III: w_3 ^ A + w_1 ^ C).
F3Report f3_residuals(const F3Family& fam);

struct ClassifyReport {
  int lambda_dim = 0;
  SolutionSpace lambda_basis;
  std::vector<std::pair<int, int>> forced_zero_lambdas;  // (vertex, edge)
  long long omega_free_parameters = 0;
  std::vector<std::string> caveats;
};

ClassifyReport classify_diagonal(const Graph& g);

}  // namespace graphbialg
