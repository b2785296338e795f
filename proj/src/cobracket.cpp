#include "graphbialg/cobracket.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphbialg/invariants.hpp"
#include "graphbialg/tst.hpp"

namespace graphbialg {

Cobracket::Cobracket(TwoStepAlgebra alg)
    : alg_(std::move(alg)), idx_(alg_.dim()) {
  cols_.assign(static_cast<std::size_t>(alg_.dim()),
               ExtVector(2, static_cast<std::size_t>(idx_.dim2())));
}

const ExtVector& Cobracket::column(int full_index) const {
  if (full_index < 0 || full_index >= alg_.dim())
    throw std::out_of_range("Cobracket: column index out of range");
  return cols_[static_cast<std::size_t>(full_index)];
}

void Cobracket::set_column(int full_index, ExtVector v) {
  if (full_index < 0 || full_index >= alg_.dim())
    throw std::out_of_range("Cobracket: column index out of range");
  if (v.grade != 2 || v.coeff.size() != static_cast<std::size_t>(idx_.dim2()))
    throw std::invalid_argument("Cobracket: column has wrong shape");
  cols_[static_cast<std::size_t>(full_index)] = std::move(v);
}

void Cobracket::add_term(int full_index, int p, int q, const Rational& c) {
  if (full_index < 0 || full_index >= alg_.dim())
    throw std::out_of_range("Cobracket: column index out of range");
  cols_[static_cast<std::size_t>(full_index)]
      .coeff[static_cast<std::size_t>(idx_.pair_index(p, q))] += c;
}

ExtVector Cobracket::apply(const Element& x) const {
  ExtVector r(2, static_cast<std::size_t>(idx_.dim2()));
  std::vector<Rational> flat = x.flat();
  if (flat.size() != cols_.size())
    throw std::invalid_argument("Cobracket: algebra mismatch");
  for (std::size_t g = 0; g < flat.size(); ++g) {
    if (flat[g].is_zero()) continue;
    ExtVector term = cols_[g];
    term.scale(flat[g]);
    r += term;
  }
  return r;
}

Cobracket Cobracket::scaled(const Rational& c) const {
  Cobracket r = *this;
  for (auto& col : r.cols_) col.scale(c);
  return r;
}

ResidualReport check_cojacobi(const Cobracket& d) {
  const TwoStepAlgebra& a = d.algebra();
  const ExteriorIndex& idx = d.index();
  ResidualReport rep;
  for (int g = 0; g < a.dim(); ++g) {
    const ExtVector& dg = d.column(g);
    ExtVector residual(3, static_cast<std::size_t>(idx.dim3()));
    for (int t = 0; t < idx.dim2(); ++t) {
      const Rational& c = dg.coeff[static_cast<std::size_t>(t)];
      if (c.is_zero()) continue;
      auto [p, q] = idx.pair_at(t);
      // delta(x1) ^ x2 - x1 ^ delta(x2) on the monomial c * b_p ^ b_q
      ExtVector lhs = wedge(d.column(p), ext_from_element(a.basis(q)), idx);
      lhs -= wedge(ext_from_element(a.basis(p)), d.column(q), idx);
      lhs.scale(c);
      residual += lhs;
    }
    if (!residual.is_zero()) {
      rep.pass = false;
      rep.offenders.emplace_back(a.basis_name(g), std::move(residual));
    }
  }
  return rep;
}

ResidualReport check_cocycle(const Cobracket& d) {
  const TwoStepAlgebra& a = d.algebra();
  const ExteriorIndex& idx = d.index();
  ResidualReport rep;
  for (int i = 0; i < a.dim(); ++i) {
    Element bi = a.basis(i);
    for (int j = i + 1; j < a.dim(); ++j) {
      Element bj = a.basis(j);
      ExtVector residual = d.apply(a.bracket(bi, bj));
      residual -= ad_on_ext(a, bi, d.column(j), idx);
      residual += ad_on_ext(a, bj, d.column(i), idx);
      if (!residual.is_zero()) {
        rep.pass = false;
        rep.offenders.emplace_back(
            "[" + a.basis_name(i) + "," + a.basis_name(j) + "]",
            std::move(residual));
      }
    }
  }
  return rep;
}

bool is_bialgebra(const Cobracket& d) {
  return check_cojacobi(d).pass && check_cocycle(d).pass;
}

Delta1Report delta1_cojacobi(const Cobracket& d) {
  const TwoStepAlgebra& a = d.algebra();
  const ExteriorIndex& idx = d.index();
  Delta1Report rep;
  rep.precondition_ok = is_bialgebra(d);
  const int w = a.dim_w();
  ExteriorIndex widx(w);
  // delta_1 columns over the W-only pair basis
  std::vector<ExtVector> delta1(static_cast<std::size_t>(w),
                                ExtVector(2, static_cast<std::size_t>(widx.dim2())));
  for (int g = 0; g < w; ++g)
    for (int t = 0; t < idx.dim2(); ++t) {
      const Rational& c = d.column(g).coeff[static_cast<std::size_t>(t)];
      if (c.is_zero()) continue;
      auto [p, q] = idx.pair_at(t);
      if (q < w)
        delta1[static_cast<std::size_t>(g)]
            .coeff[static_cast<std::size_t>(widx.pair_index(p, q))] = c;
    }
  rep.pass = true;
  for (int g = 0; g < w && rep.pass; ++g) {
    ExtVector residual(3, static_cast<std::size_t>(widx.dim3()));
    for (int t = 0; t < widx.dim2(); ++t) {
      const Rational& c =
          delta1[static_cast<std::size_t>(g)].coeff[static_cast<std::size_t>(t)];
      if (c.is_zero()) continue;
      auto [p, q] = widx.pair_at(t);
      ExtVector ep(1, static_cast<std::size_t>(w)), eq(1, static_cast<std::size_t>(w));
      ep.coeff[static_cast<std::size_t>(p)] = Rational(1);
      eq.coeff[static_cast<std::size_t>(q)] = Rational(1);
      ExtVector lhs = wedge(delta1[static_cast<std::size_t>(p)], eq, widx);
      lhs -= wedge(ep, delta1[static_cast<std::size_t>(q)], widx);
      lhs.scale(c);
      residual += lhs;
    }
    if (!residual.is_zero()) rep.pass = false;
  }
  return rep;
}

ContainmentReport structural_containment(const Cobracket& d) {
  const TwoStepAlgebra& a = d.algebra();
  const ExteriorIndex& idx = d.index();
  ContainmentReport rep;
  rep.hypotheses_ok = invariants_equal_lambda2z(a) && is_tst_type(a);
  GradedMasks masks = graded_projectors(a, idx);
  rep.pass = true;
  for (int g = 0; g < a.dim(); ++g) {
    bool central = g >= a.dim_w();
    for (int t = 0; t < idx.dim2(); ++t) {
      if (d.column(g).coeff[static_cast<std::size_t>(t)].is_zero()) continue;
      int comp = masks.component[static_cast<std::size_t>(t)];
      bool ok = central ? comp == 2 : comp != 0;
      if (!ok) {
        rep.pass = false;
        rep.violations.emplace_back(a.basis_name(g), t);
      }
    }
  }
  return rep;
}

ConstructionData ConstructionData::zero(const TwoStepAlgebra& a) {
  ConstructionData data;
  std::size_t d2z = static_cast<std::size_t>(a.dim_z()) * (a.dim_z() - 1) / 2;
  data.delta_z.assign(static_cast<std::size_t>(a.dim_z()),
                      std::vector<Rational>(d2z));
  data.d_family.assign(static_cast<std::size_t>(a.dim_z()),
                       Mat(static_cast<std::size_t>(a.dim_w()),
                           static_cast<std::size_t>(a.dim_w())));
  data.phi_star.assign(static_cast<std::size_t>(a.dim_w()),
                       std::vector<Rational>(d2z));
  return data;
}

namespace {

std::size_t lambda2z_size(const TwoStepAlgebra& a) {
  return static_cast<std::size_t>(a.dim_z()) * (a.dim_z() - 1) / 2;
}

void check_data_shape(const TwoStepAlgebra& a, const ConstructionData& data) {
  const std::size_t d2z = lambda2z_size(a);
  if (data.delta_z.size() != static_cast<std::size_t>(a.dim_z()) ||
      data.d_family.size() != static_cast<std::size_t>(a.dim_z()) ||
      data.phi_star.size() != static_cast<std::size_t>(a.dim_w()))
    throw std::invalid_argument("ConstructionData: dimension mismatch");
  for (const auto& col : data.delta_z)
    if (col.size() != d2z)
      throw std::invalid_argument("ConstructionData: delta_z column size");
  for (const auto& m : data.d_family)
    if (m.rows() != static_cast<std::size_t>(a.dim_w()) ||
        m.cols() != static_cast<std::size_t>(a.dim_w()))
      throw std::invalid_argument("ConstructionData: D matrix size");
  for (const auto& col : data.phi_star)
    if (col.size() != d2z)
      throw std::invalid_argument("ConstructionData: phi_star column size");
}

}  // namespace

Cobracket build_from_data(const TwoStepAlgebra& a, const ConstructionData& data) {
  check_data_shape(a, data);
  Cobracket d(a);
  const int w = a.dim_w();
  ExteriorIndex zidx(std::max(a.dim_z(), 1));
  // central columns: embed delta_z into the full Lambda^2 basis
  for (int k = 0; k < a.dim_z(); ++k) {
    const auto& col = data.delta_z[static_cast<std::size_t>(k)];
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      auto [za, zb] = zidx.pair_at(static_cast<int>(t));
      d.add_term(w + k, w + za, w + zb, col[t]);
    }
  }
  // W columns: sum_i D^i(v) ^ z_i + phi_star(v)
  for (int v = 0; v < w; ++v) {
    for (int i = 0; i < a.dim_z(); ++i) {
      const Mat& di = data.d_family[static_cast<std::size_t>(i)];
      for (int r = 0; r < w; ++r) {
        const Rational& c =
            di.at(static_cast<std::size_t>(r), static_cast<std::size_t>(v));
        if (!c.is_zero()) d.add_term(v, r, w + i, c);
      }
    }
    const auto& col = data.phi_star[static_cast<std::size_t>(v)];
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      auto [za, zb] = zidx.pair_at(static_cast<int>(t));
      d.add_term(v, w + za, w + zb, col[t]);
    }
  }
  return d;
}

ConstructionCheckReport check_construction_data(const TwoStepAlgebra& a,
                                                const ConstructionData& data) {
  check_data_shape(a, data);
  ConstructionCheckReport rep;
  const int nz = a.dim_z();
  const int w = a.dim_w();
  ExteriorIndex zidx(std::max(nz, 1));

  // (1) co-Jacobi of delta_z inside the exterior algebra of z
  rep.delta_z_cojacobi = true;
  for (int k = 0; k < nz && rep.delta_z_cojacobi; ++k) {
    ExtVector residual(3, static_cast<std::size_t>(zidx.dim3()));
    const auto& col = data.delta_z[static_cast<std::size_t>(k)];
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      auto [za, zb] = zidx.pair_at(static_cast<int>(t));
      ExtVector da(2, static_cast<std::size_t>(zidx.dim2()));
      da.coeff.assign(data.delta_z[static_cast<std::size_t>(za)].begin(),
                      data.delta_z[static_cast<std::size_t>(za)].end());
      ExtVector db(2, static_cast<std::size_t>(zidx.dim2()));
      db.coeff.assign(data.delta_z[static_cast<std::size_t>(zb)].begin(),
                      data.delta_z[static_cast<std::size_t>(zb)].end());
      ExtVector ea(1, static_cast<std::size_t>(zidx.n()));
      ea.coeff[static_cast<std::size_t>(za)] = Rational(1);
      ExtVector eb(1, static_cast<std::size_t>(zidx.n()));
      eb.coeff[static_cast<std::size_t>(zb)] = Rational(1);
      ExtVector term = wedge(da, eb, zidx);
      term -= wedge(ea, db, zidx);
      term.scale(col[t]);
      residual += term;
    }
    if (!residual.is_zero()) rep.delta_z_cojacobi = false;
  }

  // (2) homomorphism: for dual basis pairs f = z^a, g = z^b,
  //     D([f,g]) = D(f)D(g) - D(g)D(f); with D(z^k) = -D^k this reads
  //     -sum_k c^k_{ab} D^k = D^a D^b - D^b D^a,
  //     where delta_z(z_k) = sum_{a<b} c^k_{ab} z_a ^ z_b.
  rep.d_homomorphism = true;
  for (int za = 0; za < nz && rep.d_homomorphism; ++za) {
    for (int zb = za + 1; zb < nz && rep.d_homomorphism; ++zb) {
      const Mat& da = data.d_family[static_cast<std::size_t>(za)];
      const Mat& db = data.d_family[static_cast<std::size_t>(zb)];
      Mat rhs = da * db - db * da;
      Mat lhs(static_cast<std::size_t>(w), static_cast<std::size_t>(w));
      int pair = zidx.pair_index(za, zb);
      for (int k = 0; k < nz; ++k) {
        const Rational& c =
            data.delta_z[static_cast<std::size_t>(k)][static_cast<std::size_t>(pair)];
        if (c.is_zero()) continue;
        Mat term = data.d_family[static_cast<std::size_t>(k)];
        for (std::size_t r = 0; r < term.rows(); ++r)
          for (std::size_t s = 0; s < term.cols(); ++s)
            lhs.at(r, s) -= c * term.at(r, s);
      }
      if (!(lhs == rhs)) rep.d_homomorphism = false;
    }
  }

  // (3) compatibility on all W-basis pairs
  rep.compatibility = true;
  for (int p = 0; p < w && rep.compatibility; ++p) {
    for (int q = p + 1; q < w && rep.compatibility; ++q) {
      std::vector<Rational> ep(static_cast<std::size_t>(w)),
          eq(static_cast<std::size_t>(w));
      ep[static_cast<std::size_t>(p)] = Rational(1);
      eq[static_cast<std::size_t>(q)] = Rational(1);
      std::vector<Rational> lhs(lambda2z_size(a));
      for (int i = 0; i < nz; ++i) {
        Rational c = a.t_apply(i, ep, eq);
        if (c.is_zero()) continue;
        const auto& col = data.delta_z[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; t < col.size(); ++t)
          if (!col[t].is_zero()) lhs[t] += c * col[t];
      }
      std::vector<Rational> rhs(lambda2z_size(a));
      for (int i = 0; i < nz; ++i) {
        for (int j = 0; j < nz; ++j) {
          if (i == j) continue;
          const Mat& dj = data.d_family[static_cast<std::size_t>(j)];
          std::vector<Rational> djp(static_cast<std::size_t>(w)),
              djq(static_cast<std::size_t>(w));
          for (int r = 0; r < w; ++r) {
            djp[static_cast<std::size_t>(r)] =
                dj.at(static_cast<std::size_t>(r), static_cast<std::size_t>(p));
            djq[static_cast<std::size_t>(r)] =
                dj.at(static_cast<std::size_t>(r), static_cast<std::size_t>(q));
          }
          Rational m = a.t_apply(i, djp, eq) + a.t_apply(i, ep, djq);
          if (m.is_zero()) continue;
          if (i < j)
            rhs[static_cast<std::size_t>(zidx.pair_index(i, j))] += m;
          else
            rhs[static_cast<std::size_t>(zidx.pair_index(j, i))] -= m;
        }
      }
      if (lhs != rhs) rep.compatibility = false;
    }
  }
  return rep;
}

bool is_nearly_coboundary(const Cobracket& d) {
  const TwoStepAlgebra& a = d.algebra();
  for (int k = 0; k < a.dim_z(); ++k)
    if (!d.column(a.dim_w() + k).is_zero()) return false;
  return true;
}

std::vector<Mat> read_d_family(const Cobracket& d) {
  const TwoStepAlgebra& a = d.algebra();
  const ExteriorIndex& idx = d.index();
  const int w = a.dim_w();
  std::vector<Mat> family(static_cast<std::size_t>(a.dim_z()),
                          Mat(static_cast<std::size_t>(w),
                              static_cast<std::size_t>(w)));
  for (int v = 0; v < w; ++v)
    for (int t = 0; t < idx.dim2(); ++t) {
      const Rational& c = d.column(v).coeff[static_cast<std::size_t>(t)];
      if (c.is_zero()) continue;
      auto [p, q] = idx.pair_at(t);
      if (p < w && q >= w)
        family[static_cast<std::size_t>(q - w)].at(
            static_cast<std::size_t>(p), static_cast<std::size_t>(v)) = c;
    }
  return family;
}

}  // namespace graphbialg
