#pragma once

#include <string>
#include <vector>

#include "graphbialg/graph.hpp"
#include "graphbialg/matrix.hpp"

namespace graphbialg {

// Element of n = W (+) z as a pair of coefficient vectors over the chosen
// bases. Plain data; all algebra operations go through TwoStepAlgebra.
struct Element {
  std::vector<Rational> w;
  std::vector<Rational> z;

  std::vector<Rational> flat() const;
  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& scale(const Rational& c);
  friend bool operator==(const Element& a, const Element& b) {
    return a.w == b.w && a.z == b.z;
  }
};

// 2-step nilpotent Lie algebra n = W (+) z with bracket
// [v,w] = sum_i T_i(v)(w) z_i for antisymmetric tensors T_i : W -> W*.
// The bracket of anything with the z block is zero, so the 2-step property
// holds by construction; antisymmetry of supplied tensors is checked by
// check_algebra, not at construction (negative tests need bad tensors).
class TwoStepAlgebra {
 public:
  static TwoStepAlgebra from_graph(const Graph& g);
  static TwoStepAlgebra heisenberg(int m);
  static TwoStepAlgebra from_tensors(int dim_w, std::vector<Mat> tensors);

  int dim_w() const { return dim_w_; }
  int dim_z() const { return dim_z_; }
  int dim() const { return dim_w_ + dim_z_; }

  const Mat& t_tensor(int i) const { return t_[static_cast<std::size_t>(i)]; }

  const std::string& w_name(int i) const {
    return w_names_[static_cast<std::size_t>(i)];
  }
  const std::string& z_name(int i) const {
    return z_names_[static_cast<std::size_t>(i)];
  }
  // name of basis element by full index (W block first, then z block)
  const std::string& basis_name(int i) const;
  // full basis index for a name, or -1
  int basis_index(const std::string& name) const;

  Element zero_element() const;
  Element w_basis(int i) const;
  Element z_basis(int i) const;
  Element basis(int full_index) const;

  // T_i(v)(w) for W-coordinate vectors v, w
  Rational t_apply(int i, const std::vector<Rational>& v,
                   const std::vector<Rational>& w) const;

  Element bracket(const Element& x, const Element& y) const;

 private:
  int dim_w_ = 0;
  int dim_z_ = 0;
  std::vector<Mat> t_;
  std::vector<std::string> w_names_;
  std::vector<std::string> z_names_;
};

struct AlgebraCheckReport {
  bool antisymmetry_ok = true;
  bool two_step_ok = true;
  bool jacobi_ok = true;
  std::vector<std::string> failures;

  bool pass() const { return antisymmetry_ok && two_step_ok && jacobi_ok; }
};

// Verifies antisymmetry of every T_i, the 2-step property [x,[y,w]] = 0 and
// the Jacobi identity on all basis triples.
AlgebraCheckReport check_algebra(const TwoStepAlgebra& a);

}  // namespace graphbialg
