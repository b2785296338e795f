#include "graphbialg/algebra.hpp"

#include <stdexcept>

namespace graphbialg {

std::vector<Rational> Element::flat() const {
  std::vector<Rational> f = w;
  f.insert(f.end(), z.begin(), z.end());
  return f;
}

bool Element::is_zero() const {
  for (const auto& c : w)
    if (!c.is_zero()) return false;
  for (const auto& c : z)
    if (!c.is_zero()) return false;
  return true;
}

Element& Element::operator+=(const Element& o) {
  if (w.size() != o.w.size() || z.size() != o.z.size())
    throw std::invalid_argument("Element: algebra mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += o.w[i];
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += o.z[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (w.size() != o.w.size() || z.size() != o.z.size())
    throw std::invalid_argument("Element: algebra mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= o.w[i];
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= o.z[i];
  return *this;
}

Element& Element::scale(const Rational& c) {
  for (auto& x : w) x *= c;
  for (auto& x : z) x *= c;
  return *this;
}

TwoStepAlgebra TwoStepAlgebra::from_graph(const Graph& g) {
  TwoStepAlgebra a;
  a.dim_w_ = g.vertex_count();
  a.dim_z_ = g.edge_count();
  a.t_.reserve(static_cast<std::size_t>(a.dim_z_));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [i, j] = g.edges()[static_cast<std::size_t>(e)];
    Mat t(static_cast<std::size_t>(a.dim_w_), static_cast<std::size_t>(a.dim_w_));
    // [T_alpha] = E_{j,i} - E_{i,j}: T_alpha(e_i) = e_j^*, T_alpha(e_j) = -e_i^*
    t.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Rational(1);
    t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(-1);
    a.t_.push_back(std::move(t));
    a.z_names_.push_back(g.edge_name(e));
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    a.w_names_.push_back(g.vertex_name(v));
  return a;
}

TwoStepAlgebra TwoStepAlgebra::heisenberg(int m) {
  if (m < 1) throw std::invalid_argument("heisenberg: m must be >= 1");
  TwoStepAlgebra a;
  a.dim_w_ = 2 * m;
  a.dim_z_ = 1;
  Mat t(static_cast<std::size_t>(a.dim_w_), static_cast<std::size_t>(a.dim_w_));
  for (int k = 0; k < m; ++k) {
    // symplectic pair (x_k, y_k) at indices (2k, 2k+1)
    t.at(static_cast<std::size_t>(2 * k + 1), static_cast<std::size_t>(2 * k)) =
        Rational(1);
    t.at(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(2 * k + 1)) =
        Rational(-1);
  }
  a.t_.push_back(std::move(t));
  for (int i = 0; i < a.dim_w_; ++i)
    a.w_names_.push_back("v" + std::to_string(i + 1));
  a.z_names_.push_back("z1");
  return a;
}

TwoStepAlgebra TwoStepAlgebra::from_tensors(int dim_w, std::vector<Mat> tensors) {
  if (dim_w < 1) throw std::invalid_argument("from_tensors: dim_w must be >= 1");
  for (const auto& t : tensors)
    if (t.rows() != static_cast<std::size_t>(dim_w) ||
        t.cols() != static_cast<std::size_t>(dim_w))
      throw std::invalid_argument("from_tensors: tensor size mismatch");
  TwoStepAlgebra a;
  a.dim_w_ = dim_w;
  a.dim_z_ = static_cast<int>(tensors.size());
  a.t_ = std::move(tensors);
  for (int i = 0; i < a.dim_w_; ++i)
    a.w_names_.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < a.dim_z_; ++i)
    a.z_names_.push_back("z" + std::to_string(i + 1));
  return a;
}

const std::string& TwoStepAlgebra::basis_name(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("basis index out of range");
  return i < dim_w_ ? w_names_[static_cast<std::size_t>(i)]
                    : z_names_[static_cast<std::size_t>(i - dim_w_)];
}

int TwoStepAlgebra::basis_index(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_name(i) == name) return i;
  return -1;
}

Element TwoStepAlgebra::zero_element() const {
  Element e;
  e.w.resize(static_cast<std::size_t>(dim_w_));
  e.z.resize(static_cast<std::size_t>(dim_z_));
  return e;
}

Element TwoStepAlgebra::w_basis(int i) const {
  if (i < 0 || i >= dim_w_) throw std::out_of_range("W basis index out of range");
  Element e = zero_element();
  e.w[static_cast<std::size_t>(i)] = Rational(1);
  return e;
}

Element TwoStepAlgebra::z_basis(int i) const {
  if (i < 0 || i >= dim_z_) throw std::out_of_range("z basis index out of range");
  Element e = zero_element();
  e.z[static_cast<std::size_t>(i)] = Rational(1);
  return e;
}

Element TwoStepAlgebra::basis(int full_index) const {
  if (full_index < 0 || full_index >= dim())
    throw std::out_of_range("basis index out of range");
  return full_index < dim_w_ ? w_basis(full_index)
                             : z_basis(full_index - dim_w_);
}

Rational TwoStepAlgebra::t_apply(int i, const std::vector<Rational>& v,
                                 const std::vector<Rational>& w) const {
  const Mat& t = t_tensor(i);
  Rational s;
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (w[r].is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero() || t.at(r, c).is_zero()) continue;
      s += t.at(r, c) * w[r] * v[c];
    }
  }
  return s;
}

Element TwoStepAlgebra::bracket(const Element& x, const Element& y) const {
  if (static_cast<int>(x.w.size()) != dim_w_ ||
      static_cast<int>(y.w.size()) != dim_w_ ||
      static_cast<int>(x.z.size()) != dim_z_ ||
      static_cast<int>(y.z.size()) != dim_z_)
    throw std::invalid_argument("bracket: algebra mismatch");
  Element r = zero_element();
  // central parts do not contribute
  for (int k = 0; k < dim_z_; ++k)
    r.z[static_cast<std::size_t>(k)] = t_apply(k, x.w, y.w);
  return r;
}

AlgebraCheckReport check_algebra(const TwoStepAlgebra& a) {
  AlgebraCheckReport rep;
  for (int k = 0; k < a.dim_z(); ++k) {
    const Mat& t = a.t_tensor(k);
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c)
        if (!(t.at(r, c) + t.at(c, r)).is_zero()) {
          rep.antisymmetry_ok = false;
          rep.failures.push_back("tensor " + a.z_name(k) +
                                 " is not antisymmetric at entry (" +
                                 std::to_string(r) + "," + std::to_string(c) +
                                 ")");
          goto next_tensor;
        }
  next_tensor:;
  }
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    Element bi = a.basis(i);
    for (int j = 0; j < n; ++j) {
      Element bij = a.bracket(bi, a.basis(j));
      for (int k = 0; k < n; ++k) {
        Element bk = a.basis(k);
        if (!a.bracket(bk, bij).is_zero()) {
          rep.two_step_ok = false;
          rep.failures.push_back("[b" + std::to_string(k) + ",[b" +
                                 std::to_string(i) + ",b" + std::to_string(j) +
                                 "]] != 0");
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    Element bi = a.basis(i);
    for (int j = i + 1; j < n; ++j) {
      Element bj = a.basis(j);
      for (int k = j + 1; k < n; ++k) {
        Element bk = a.basis(k);
        Element s = a.bracket(bi, a.bracket(bj, bk));
        s += a.bracket(bj, a.bracket(bk, bi));
        s += a.bracket(bk, a.bracket(bi, bj));
        if (!s.is_zero()) {
          rep.jacobi_ok = false;
          rep.failures.push_back("Jacobi fails on (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 ")");
        }
      }
    }
  }
  return rep;
}

}  // namespace graphbialg
