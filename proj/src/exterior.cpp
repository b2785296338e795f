#include "graphbialg/exterior.hpp"

#include <stdexcept>

namespace graphbialg {

ExteriorIndex::ExteriorIndex(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ExteriorIndex: n must be >= 1");
  pair_lookup_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      pair_lookup_[static_cast<std::size_t>(p) * n + q] =
          static_cast<int>(pairs_.size());
      pairs_.emplace_back(p, q);
    }
  triple_lookup_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r) {
        triple_lookup_[(static_cast<std::size_t>(p) * n + q) * n + r] =
            static_cast<int>(triples_.size());
        triples_.push_back({p, q, r});
      }
}

int ExteriorIndex::pair_index(int p, int q) const {
  if (p < 0 || q <= p || q >= n_)
    throw std::out_of_range("pair_index: need 0 <= p < q < n");
  return pair_lookup_[static_cast<std::size_t>(p) * n_ + q];
}

int ExteriorIndex::triple_index(int p, int q, int r) const {
  if (p < 0 || q <= p || r <= q || r >= n_)
    throw std::out_of_range("triple_index: need 0 <= p < q < r < n");
  return triple_lookup_[(static_cast<std::size_t>(p) * n_ + q) * n_ + r];
}

bool ExtVector::is_zero() const {
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

ExtVector& ExtVector::operator+=(const ExtVector& o) {
  if (grade != o.grade || coeff.size() != o.coeff.size())
    throw std::invalid_argument("ExtVector: grade mismatch");
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
  return *this;
}

ExtVector& ExtVector::operator-=(const ExtVector& o) {
  if (grade != o.grade || coeff.size() != o.coeff.size())
    throw std::invalid_argument("ExtVector: grade mismatch");
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] -= o.coeff[i];
  return *this;
}

ExtVector& ExtVector::scale(const Rational& c) {
  for (auto& x : coeff) x *= c;
  return *this;
}

ExtVector ext_from_element(const Element& e) {
  ExtVector v;
  v.grade = 1;
  v.coeff = e.flat();
  return v;
}

namespace {

ExtVector wedge11(const ExtVector& a, const ExtVector& b,
                  const ExteriorIndex& idx) {
  ExtVector r(2, static_cast<std::size_t>(idx.dim2()));
  std::vector<int> nza, nzb;
  for (int i = 0; i < idx.n(); ++i) {
    if (!a.coeff[static_cast<std::size_t>(i)].is_zero()) nza.push_back(i);
    if (!b.coeff[static_cast<std::size_t>(i)].is_zero()) nzb.push_back(i);
  }
  for (int p : nza)
    for (int q : nzb) {
      if (p == q) continue;
      Rational c = a.coeff[static_cast<std::size_t>(p)] *
                   b.coeff[static_cast<std::size_t>(q)];
      if (p < q)
        r.coeff[static_cast<std::size_t>(idx.pair_index(p, q))] += c;
      else
        r.coeff[static_cast<std::size_t>(idx.pair_index(q, p))] -= c;
    }
  return r;
}

// (e_p ^ e_q) ^ e_r sorted with permutation sign
ExtVector wedge21(const ExtVector& a, const ExtVector& b,
                  const ExteriorIndex& idx) {
  ExtVector r(3, static_cast<std::size_t>(idx.dim3()));
  for (int pq = 0; pq < idx.dim2(); ++pq) {
    const Rational& ca = a.coeff[static_cast<std::size_t>(pq)];
    if (ca.is_zero()) continue;
    auto [p, q] = idx.pair_at(pq);
    for (int s = 0; s < idx.n(); ++s) {
      const Rational& cb = b.coeff[static_cast<std::size_t>(s)];
      if (cb.is_zero() || s == p || s == q) continue;
      Rational c = ca * cb;
      int t;
      if (s > q) {
        t = idx.triple_index(p, q, s);
      } else if (s > p) {
        t = idx.triple_index(p, s, q);
        c = -c;
      } else {
        t = idx.triple_index(s, p, q);
      }
      r.coeff[static_cast<std::size_t>(t)] += c;
    }
  }
  return r;
}

}  // namespace

ExtVector wedge(const ExtVector& a, const ExtVector& b,
                const ExteriorIndex& idx) {
  if (a.grade == 1 && b.grade == 1) return wedge11(a, b, idx);
  if (a.grade == 2 && b.grade == 1) return wedge21(a, b, idx);
  if (a.grade == 1 && b.grade == 2) return wedge21(b, a, idx);  // even * odd
  throw std::invalid_argument("wedge: unsupported grade combination");
}

GradedMasks graded_projectors(const TwoStepAlgebra& a,
                              const ExteriorIndex& idx) {
  GradedMasks m;
  m.component.resize(static_cast<std::size_t>(idx.dim2()));
  for (int i = 0; i < idx.dim2(); ++i) {
    auto [p, q] = idx.pair_at(i);
    int comp = p >= a.dim_w() ? 2 : (q >= a.dim_w() ? 1 : 0);
    m.component[static_cast<std::size_t>(i)] = comp;
    (comp == 0 ? m.lambda2_w : comp == 1 ? m.w_wedge_z : m.lambda2_z)
        .push_back(i);
  }
  return m;
}

namespace {

// ad_g(b_p ^ b_q) for basis generators, accumulated into out
void ad_basis_pair(const TwoStepAlgebra& a, const ExteriorIndex& idx, int g,
                   int p, int q, const Rational& scale, ExtVector& out) {
  const int w = a.dim_w();
  if (g >= w) return;  // central generators act by zero
  // [b_g, b_p] ^ b_q
  if (p < w) {
    for (int k = 0; k < a.dim_z(); ++k) {
      const Rational& c = a.t_tensor(k).at(static_cast<std::size_t>(p),
                                           static_cast<std::size_t>(g));
      if (c.is_zero()) continue;
      int zk = w + k;
      if (zk == q) continue;
      Rational v = scale * c;
      if (zk < q)
        out.coeff[static_cast<std::size_t>(idx.pair_index(zk, q))] += v;
      else
        out.coeff[static_cast<std::size_t>(idx.pair_index(q, zk))] -= v;
    }
  }
  // b_p ^ [b_g, b_q]
  if (q < w) {
    for (int k = 0; k < a.dim_z(); ++k) {
      const Rational& c = a.t_tensor(k).at(static_cast<std::size_t>(q),
                                           static_cast<std::size_t>(g));
      if (c.is_zero()) continue;
      int zk = w + k;
      if (zk == p) continue;
      Rational v = scale * c;
      if (p < zk)
        out.coeff[static_cast<std::size_t>(idx.pair_index(p, zk))] += v;
      else
        out.coeff[static_cast<std::size_t>(idx.pair_index(zk, p))] -= v;
    }
  }
}

}  // namespace

ExtVector ad_on_ext(const TwoStepAlgebra& a, const Element& x,
                    const ExtVector& omega, const ExteriorIndex& idx) {
  if (omega.grade != 2) throw std::invalid_argument("ad_on_ext: grade mismatch");
  if (static_cast<int>(x.w.size()) != a.dim_w() ||
      static_cast<int>(x.z.size()) != a.dim_z())
    throw std::invalid_argument("ad_on_ext: algebra mismatch");
  ExtVector r(2, static_cast<std::size_t>(idx.dim2()));
  for (int g = 0; g < a.dim_w(); ++g) {
    const Rational& xg = x.w[static_cast<std::size_t>(g)];
    if (xg.is_zero()) continue;
    for (int i = 0; i < idx.dim2(); ++i) {
      const Rational& c = omega.coeff[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      auto [p, q] = idx.pair_at(i);
      ad_basis_pair(a, idx, g, p, q, xg * c, r);
    }
  }
  return r;
}

Mat ad_matrix_on_lambda2(const TwoStepAlgebra& a, int basis_index,
                         const ExteriorIndex& idx) {
  if (basis_index < 0 || basis_index >= a.dim())
    throw std::out_of_range("ad_matrix_on_lambda2: basis index out of range");
  const std::size_t d2 = static_cast<std::size_t>(idx.dim2());
  Mat m(d2, d2);
  if (basis_index >= a.dim_w()) return m;  // central: zero map
  for (int col = 0; col < idx.dim2(); ++col) {
    ExtVector image(2, d2);
    auto [p, q] = idx.pair_at(col);
    ad_basis_pair(a, idx, basis_index, p, q, Rational(1), image);
    for (std::size_t row = 0; row < d2; ++row)
      if (!image.coeff[row].is_zero())
        m.at(row, static_cast<std::size_t>(col)) = std::move(image.coeff[row]);
  }
  return m;
}

Mat ad_matrix_on_lambda2(const TwoStepAlgebra& a, int basis_index) {
  ExteriorIndex idx(a.dim());
  return ad_matrix_on_lambda2(a, basis_index, idx);
}

}  // namespace graphbialg
