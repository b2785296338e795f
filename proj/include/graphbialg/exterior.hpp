#pragma once

#include <array>
#include <utility>
#include <vector>

#include "graphbialg/algebra.hpp"
#include "graphbialg/matrix.hpp"

namespace graphbialg {

// Indexed bases of Lambda^2 and Lambda^3 of an n-dimensional space: strictly
// increasing index tuples enumerated lexicographically.
class ExteriorIndex {
 public:
  explicit ExteriorIndex(int n);

  int n() const { return n_; }
  int dim2() const { return static_cast<int>(pairs_.size()); }
  int dim3() const { return static_cast<int>(triples_.size()); }

  int pair_index(int p, int q) const;  // requires p < q
  const std::pair<int, int>& pair_at(int idx) const {
    return pairs_[static_cast<std::size_t>(idx)];
  }
  int triple_index(int p, int q, int r) const;  // requires p < q < r
  const std::array<int, 3>& triple_at(int idx) const {
    return triples_[static_cast<std::size_t>(idx)];
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_lookup_;  // n*n
  std::vector<std::array<int, 3>> triples_;
  std::vector<int> triple_lookup_;  // n*n*n
};

// Homogeneous exterior-algebra vector in the flat basis of its grade.
// Grade 1 vectors have length n, grade 2 length C(n,2), grade 3 length C(n,3).
struct ExtVector {
  int grade = 1;
  std::vector<Rational> coeff;

  ExtVector() = default;
  ExtVector(int g, std::size_t size) : grade(g), coeff(size) {}

  bool is_zero() const;
  ExtVector& operator+=(const ExtVector& o);
  ExtVector& operator-=(const ExtVector& o);
  ExtVector& scale(const Rational& c);
  friend bool operator==(const ExtVector& a, const ExtVector& b) {
    return a.grade == b.grade && a.coeff == b.coeff;
  }
  friend bool operator!=(const ExtVector& a, const ExtVector& b) {
    return !(a == b);
  }
};

ExtVector ext_from_element(const Element& e);

// Antisymmetric bilinear wedge with the sign of sorting the index tuple.
// Supported grade combinations: 1^1 -> 2, 2^1 -> 3, 1^2 -> 3.
ExtVector wedge(const ExtVector& a, const ExtVector& b,
                const ExteriorIndex& idx);

// Partition of the flat Lambda^2 basis of n = W (+) z into the graded
// components Lambda^2 W, W^z and Lambda^2 z.
struct GradedMasks {
  std::vector<int> lambda2_w;
  std::vector<int> w_wedge_z;
  std::vector<int> lambda2_z;
  // 0, 1 or 2 per flat index, same order as above
  std::vector<int> component;
};

GradedMasks graded_projectors(const TwoStepAlgebra& a,
                              const ExteriorIndex& idx);

// Derivation extension of ad_x to Lambda^2:
// ad_x(b_p ^ b_q) = [x,b_p] ^ b_q + b_p ^ [x,b_q], extended linearly.
ExtVector ad_on_ext(const TwoStepAlgebra& a, const Element& x,
                    const ExtVector& omega, const ExteriorIndex& idx);

// Matrix of ad acting on the flat Lambda^2 basis for a single basis
// generator (full index into W block then z block). Central generators act
// by zero.
Mat ad_matrix_on_lambda2(const TwoStepAlgebra& a, int basis_index,
                         const ExteriorIndex& idx);
Mat ad_matrix_on_lambda2(const TwoStepAlgebra& a, int basis_index);

}  // namespace graphbialg
