#include "graphbialg/matrix.hpp"

#include <stdexcept>

namespace graphbialg {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: size mismatch");
  Mat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Mat: size mismatch");
  Mat r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Mat: size mismatch");
  Mat r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

std::vector<Rational> Mat::mul_vec(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat: size mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& m = at(i, j);
      if (m.is_zero() || v[j].is_zero()) continue;
      s += m * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

void Mat::append_rows(const Mat& b) {
  if (cols_ == 0 && rows_ == 0) {
    *this = b;
    return;
  }
  if (b.cols_ != cols_) throw std::invalid_argument("Mat: size mismatch");
  a_.insert(a_.end(), b.a_.begin(), b.a_.end());
  rows_ += b.rows_;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.mat = m;
  Mat& a = res.mat;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    if (!a.at(r, c).is_one()) {
      Rational inv = a.at(r, c).inverse();
      a.at(r, c) = Rational(1);
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!a.at(r, j).is_zero()) a.at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = a.at(i, c);
      if (f.is_zero()) continue;
      a.at(i, c) = Rational();
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a.at(r, j).is_zero()) continue;
        a.at(i, j) -= f * a.at(r, j);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

SolutionSpace nullspace(const Mat& m) {
  RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  SolutionSpace sp;
  sp.ambient_dim = cols;
  std::vector<std::size_t> pivot_of_col(cols, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    pivot_of_col[rr.pivots[i]] = i;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_of_col[f] != static_cast<std::size_t>(-1)) continue;
    std::vector<Rational> v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      const Rational& e = rr.mat.at(i, f);
      if (!e.is_zero()) v[rr.pivots[i]] = -e;
    }
    sp.basis.push_back(std::move(v));
  }
  for (const auto& v : sp.basis) {
    auto mv = m.mul_vec(v);
    for (const auto& x : mv)
      if (!x.is_zero())
        throw std::logic_error("nullspace: basis vector failed m*v = 0 check");
  }
  return sp;
}

}  // namespace graphbialg
