#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphbialg/exterior.hpp"

namespace graphbialg {

// Candidate cobracket delta : n -> Lambda^2 n, stored columnwise (one
// grade-2 vector per basis generator, W block first then z block).
class Cobracket {
 public:
  explicit Cobracket(TwoStepAlgebra alg);

  const TwoStepAlgebra& algebra() const { return alg_; }
  const ExteriorIndex& index() const { return idx_; }

  const ExtVector& column(int full_index) const;
  void set_column(int full_index, ExtVector v);
  void add_term(int full_index, int p, int q, const Rational& c);  // p < q

  // linear extension of delta to an arbitrary element
  ExtVector apply(const Element& x) const;

  Cobracket scaled(const Rational& c) const;

 private:
  TwoStepAlgebra alg_;
  ExteriorIndex idx_;
  std::vector<ExtVector> cols_;
};

// Residual report for an axiom check: the offending generators/pairs with
// their full residual vectors, so failures can be inspected downstream.
struct ResidualReport {
  bool pass = true;
  std::vector<std::pair<std::string, ExtVector>> offenders;
};

// Co-Jacobi: for every generator x with delta(x) = sum x1 ^ x2,
// delta(x1) ^ x2 - x1 ^ delta(x2) must vanish in Lambda^3 n.
ResidualReport check_cojacobi(const Cobracket& d);

// 1-cocycle: delta[x,y] - ad_x(delta y) + ad_y(delta x) must vanish for all
// basis pairs; pairs with a central generator reduce to ad-invariance of the
// central columns.
ResidualReport check_cocycle(const Cobracket& d);

bool is_bialgebra(const Cobracket& d);

struct Delta1Report {
  bool precondition_ok = false;  // d itself passes both axioms
  bool pass = false;             // delta_1 alone satisfies co-Jacobi in Lambda^3 W
};

// Extracts delta_1 (the Lambda^2 W block of delta restricted to W) and
// checks co-Jacobi of it alone. Runs even when the precondition fails.
Delta1Report delta1_cojacobi(const Cobracket& d);

struct ContainmentReport {
  bool hypotheses_ok = false;  // invariants_equal_lambda2z and is_tst_type
  bool pass = false;
  // (column name, flat Lambda^2 index) outside the allowed masks
  std::vector<std::pair<std::string, int>> violations;
};

// Asserts delta(z) in Lambda^2 z and delta(W) in W^z (+) Lambda^2 z, the
// containments guaranteed on TST-type algebras with (Lambda^2 n)^n =
// Lambda^2 z. When the hypotheses fail the check still runs but the report
// flags that containment is not guaranteed.
ContainmentReport structural_containment(const Cobracket& d);

// Data of the general construction: a coalgebra structure on z, a family of
// maps D^i : W -> W, and a map W -> Lambda^2 z. delta_z and phi_star columns
// are stored over the Lambda^2 z pair basis (lexicographic pairs of z
// indices).
struct ConstructionData {
  std::vector<std::vector<Rational>> delta_z;   // dim_z columns
  std::vector<Mat> d_family;                    // dim_z matrices, dim_w x dim_w
  std::vector<std::vector<Rational>> phi_star;  // dim_w columns

  static ConstructionData zero(const TwoStepAlgebra& a);
};

// delta(z_i) = delta_z(z_i);  delta(v) = sum_i D^i(v) ^ z_i + phi_star(v)
Cobracket build_from_data(const TwoStepAlgebra& a, const ConstructionData& data);

struct ConstructionCheckReport {
  bool delta_z_cojacobi = false;
  // D : z* -> End(W), f |-> -sum f(z_i) D^i is a Lie algebra map for the
  // bracket on z* dual to delta_z
  bool d_homomorphism = false;
  // sum_i T_i(x)(y) delta_z(z_i) =
  //   sum_{i,j} (T_i(D^j x)(y) + T_i(x)(D^j y)) z_i ^ z_j for all W pairs
  bool compatibility = false;

  bool pass() const {
    return delta_z_cojacobi && d_homomorphism && compatibility;
  }
};

ConstructionCheckReport check_construction_data(const TwoStepAlgebra& a,
                                                const ConstructionData& data);

bool is_nearly_coboundary(const Cobracket& d);

// Reads the D-family off the W^z block of delta|_W, normalizing monomials as
// (W index) ^ (z index).
std::vector<Mat> read_d_family(const Cobracket& d);

}  // namespace graphbialg
