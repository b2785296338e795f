#pragma once

#include <cstddef>
#include <vector>

#include "graphbialg/rational.hpp"

namespace graphbialg {

// Dense row-major matrix over exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<Rational> mul_vec(const std::vector<Rational>& v) const;

  // Stacks b below this matrix; column counts must match.
  void append_rows(const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  Mat mat;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Reduced row echelon form via exact Gauss-Jordan elimination.
// Pivot choice is the first nonzero entry in the column, so the result is
// deterministic (and unique, as rref always is).
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of a nullspace. Basis vectors follow the standard rref
// parametrization: free variables set to 1 one at a time in increasing
// column order.
struct SolutionSpace {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Rational>> basis;

  std::size_t dimension() const { return basis.size(); }
};

// Kernel of m. Every returned basis vector is re-verified by multiplication;
// a failure would be a solver bug and throws std::logic_error.
SolutionSpace nullspace(const Mat& m);

}  // namespace graphbialg
