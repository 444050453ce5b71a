#pragma once
#include <memory>

#include "hcnslab/expblocks.hpp"
#include "hcnslab/lie.hpp"

namespace hcns {

// Fixed R-basis of L over a base field:
//   [ (t-tbar)_2 | A-basis in grade 1 | L_0 basis | A-basis in grade -1 |
//     (t-tbar)_{-2} ]
// The L_0 basis is a maximal independent subset of the generator pairs
// (V_{b_i,b_j}, -V_{b_j,b_i}) over A-basis pairs, found by row reduction.
template <class R>
class LieBasis {
 public:
  explicit LieBasis(Hcns<R> hcns) : h(std::move(hcns)), m(a_dim(h)) {
    build_l0();
    dim = 2 + 2 * m + d0;
    if constexpr (std::is_same_v<R, Fq>) {
      if (RingTraits<R>::characteristic(h.kr->zero) == 3)
        lift = make_lifted_e3(h);
    }
  }

  Hcns<R> h;
  std::size_t m;
  std::size_t d0 = 0;
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> l0_labels;
  std::vector<std::pair<Mat<R>, Mat<R>>> l0_mats;
  std::shared_ptr<const LiftedE3> lift;  // only for characteristic 3

  int grade_of(std::size_t idx) const {
    if (idx == 0) return 2;
    if (idx <= m) return 1;
    if (idx <= m + d0) return 0;
    if (idx <= m + d0 + m) return -1;
    return -2;
  }

  LieElem<R> basis_elem(std::size_t idx) const {
    if (idx == 0) return lie_grade2(h, h.kr->one);
    if (idx <= m) return lie_grade1(h, a_basis_elem(h, idx - 1));
    if (idx <= m + d0) {
      auto& mt = l0_mats[idx - m - 1];
      return lie_instr_pair(h, mt.first, mt.second);
    }
    if (idx <= m + d0 + m)
      return lie_grade_m1(h, a_basis_elem(h, idx - m - d0 - 1));
    return lie_grade_m2(h, h.kr->one);
  }

  std::vector<R> flatten_pair(const Mat<R>& fp, const Mat<R>& fm) const {
    std::vector<R> w;
    w.reserve(2 * m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) w.push_back(fp(i, j));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) w.push_back(fm(i, j));
    return w;
  }

  // coordinates of an instr pair in the chosen L_0 basis; throws when the
  // pair is outside the span.
  std::vector<R> l0_coords(const Mat<R>& fp, const Mat<R>& fm) const {
    std::vector<R> w = flatten_pair(fp, fm);
    std::vector<R> rhs(d0, h.kr->zero);
    for (std::size_t r = 0; r < d0; ++r) rhs[r] = w[pivot_rows_[r]];
    std::vector<R> coords = solve_inv_.apply(rhs);
    // verify (also catches non-membership)
    std::vector<R> chk(w.size(), h.kr->zero);
    for (std::size_t c = 0; c < d0; ++c) {
      if (RingTraits<R>::is_zero(coords[c])) continue;
      for (std::size_t r = 0; r < w.size(); ++r)
        chk[r] = chk[r] + basis_flat_[c][r] * coords[c];
    }
    if (chk != w)
      throw std::logic_error("operator pair is not in the inner structure span");
    return coords;
  }

  std::vector<R> coords(const LieElem<R>& e) const {
    std::vector<R> v;
    v.reserve(dim);
    v.push_back(e.l2);
    auto ac = a_coords(h, e.a1);
    v.insert(v.end(), ac.begin(), ac.end());
    auto l0 = l0_coords(e.fp, e.fm);
    v.insert(v.end(), l0.begin(), l0.end());
    auto amc = a_coords(h, e.am1);
    v.insert(v.end(), amc.begin(), amc.end());
    v.push_back(e.lm2);
    return v;
  }

  LieElem<R> from_coords(const std::vector<R>& v) const {
    LieElem<R> e = lie_zero(h);
    e.l2 = v[0];
    std::vector<R> ac(v.begin() + 1, v.begin() + 1 + m);
    e.a1 = a_from_coords(h, ac);
    for (std::size_t c = 0; c < d0; ++c) {
      const R& s = v[1 + m + c];
      if (RingTraits<R>::is_zero(s)) continue;
      e.fp = e.fp + l0_mats[c].first.scaled(s);
      e.fm = e.fm + l0_mats[c].second.scaled(s);
    }
    std::vector<R> amc(v.begin() + 1 + m + d0, v.begin() + 1 + 2 * m + d0);
    e.am1 = a_from_coords(h, amc);
    e.lm2 = v[dim - 1];
    return e;
  }

 private:
  std::vector<std::size_t> pivot_rows_;
  Mat<R> solve_inv_;
  std::vector<std::vector<R>> basis_flat_;

  void build_l0() {
    // incremental elimination over the field
    std::vector<std::vector<R>> echelon;       // reduced rows
    std::vector<std::size_t> echelon_pivot;    // pivot index per row
    auto reduce = [&](std::vector<R> w) {
      for (std::size_t r = 0; r < echelon.size(); ++r) {
        const R& lead = w[echelon_pivot[r]];
        if (RingTraits<R>::is_zero(lead)) continue;
        R f = lead;  // echelon rows normalized to pivot 1
        for (std::size_t c = 0; c < w.size(); ++c)
          w[c] = w[c] - f * echelon[r][c];
      }
      return w;
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        AElem<R> a = a_basis_elem(h, i), b = a_basis_elem(h, j);
        Mat<R> fp = V_matrix(h, a, b);
        Mat<R> fm = -V_matrix(h, b, a);
        std::vector<R> w = flatten_pair(fp, fm);
        std::vector<R> red = reduce(w);
        std::size_t piv = red.size();
        for (std::size_t c = 0; c < red.size(); ++c)
          if (!RingTraits<R>::is_zero(red[c])) {
            piv = c;
            break;
          }
        if (piv == red.size()) continue;  // dependent
        R inv = *RingTraits<R>::invert(red[piv]);
        for (auto& c : red) c = c * inv;
        echelon.push_back(std::move(red));
        echelon_pivot.push_back(piv);
        l0_labels.emplace_back(i, j);
        l0_mats.emplace_back(std::move(fp), std::move(fm));
        basis_flat_.push_back(std::move(w));
      }
    }
    d0 = l0_labels.size();
    // pick d0 independent rows of the (2m^2 x d0) column matrix
    Mat<R> sub(d0, d0, h.kr->zero);
    pivot_rows_.clear();
    {
      std::vector<std::vector<R>> rows;  // candidate row echelon
      for (std::size_t r = 0; r < (d0 ? basis_flat_[0].size() : 0); ++r) {
        std::vector<R> row(d0, h.kr->zero);
        for (std::size_t c = 0; c < d0; ++c) row[c] = basis_flat_[c][r];
        // try to add to an echelon of picked rows
        std::vector<R> red = row;
        for (std::size_t q = 0; q < rows.size(); ++q) {
          std::size_t pc = q;  // rows kept fully reduced: pivot at col q
          (void)pc;
        }
        // simple approach: tentatively add and test rank via elimination
        rows.push_back(row);
        if (!full_row_rank(rows)) {
          rows.pop_back();
        } else {
          pivot_rows_.push_back(r);
          if (rows.size() == d0) break;
        }
      }
      if (pivot_rows_.size() != d0)
        throw std::logic_error("L0 basis: could not find pivot rows");
      for (std::size_t r = 0; r < d0; ++r)
        for (std::size_t c = 0; c < d0; ++c)
          sub(r, c) = basis_flat_[c][pivot_rows_[r]];
    }
    if (d0) {
      auto inv = sub.inverse();
      if (!inv) throw std::logic_error("L0 basis: pivot submatrix singular");
      solve_inv_ = *inv;
    } else {
      solve_inv_ = Mat<R>(0, 0, h.kr->zero);
    }
  }

  bool full_row_rank(const std::vector<std::vector<R>>& rows) const {
    std::vector<std::vector<R>> work = rows;
    std::size_t nr = work.size(), nc = work[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
      std::size_t piv = rank;
      while (piv < nr && RingTraits<R>::is_zero(work[piv][c])) ++piv;
      if (piv == nr) continue;
      std::swap(work[piv], work[rank]);
      R inv = *RingTraits<R>::invert(work[rank][c]);
      for (auto& v : work[rank]) v = v * inv;
      for (std::size_t r = 0; r < nr; ++r) {
        if (r == rank || RingTraits<R>::is_zero(work[r][c])) continue;
        R f = work[r][c];
        for (std::size_t cc = 0; cc < nc; ++cc)
          work[r][cc] = work[r][cc] - f * work[rank][cc];
      }
      ++rank;
    }
    return rank == nr;
  }
};

template <class R>
using LieBasisPtr = std::shared_ptr<const LieBasis<R>>;

template <class R>
LieBasisPtr<R> make_lie_basis(Hcns<R> h) {
  return std::make_shared<const LieBasis<R>>(std::move(h));
}

enum class GradeSig { preserves, reverses, neither };

inline const char* grade_sig_name(GradeSig s) {
  switch (s) {
    case GradeSig::preserves: return "preserves";
    case GradeSig::reverses: return "reverses";
    default: return "neither";
  }
}

// Exact automorphism of L, stored as a matrix on the LieBasis.
template <class R>
struct LieAuto {
  LieBasisPtr<R> basis;
  Mat<R> M;

  LieAuto compose(const LieAuto& o) const {  // this after o
    return LieAuto{basis, M * o.M};
  }
  LieAuto inverse() const {
    auto inv = M.inverse();
    if (!inv) throw std::logic_error("automorphism matrix not invertible");
    return LieAuto{basis, *inv};
  }
  LieElem<R> apply(const LieElem<R>& z) const {
    return basis->from_coords(M.apply(basis->coords(z)));
  }
  bool operator==(const LieAuto& o) const { return M == o.M; }
  bool operator!=(const LieAuto& o) const { return !(*this == o); }

  GradeSig grading_signature() const {
    bool pres = true, rev = true;
    for (std::size_t j = 0; j < basis->dim; ++j) {
      int gj = basis->grade_of(j);
      for (std::size_t i = 0; i < basis->dim; ++i) {
        if (RingTraits<R>::is_zero(M(i, j))) continue;
        int gi = basis->grade_of(i);
        if (gi != gj) pres = false;
        if (gi != -gj) rev = false;
      }
      if (!pres && !rev) return GradeSig::neither;
    }
    if (pres) return GradeSig::preserves;
    return rev ? GradeSig::reverses : GradeSig::neither;
  }
};

template <class R>
LieAuto<R> lie_identity_auto(const LieBasisPtr<R>& b) {
  return LieAuto<R>{b, Mat<R>::identity(b->dim, b->h.kr->zero)};
}

// Grade-flip isomorphism iota: (t-tbar)_{+-2} swap, A_{+-1} swap,
// (f,g) -> (g,f) on L_0. It is an automorphism reversing the grading.
template <class R>
LieAuto<R> iota_auto(const LieBasisPtr<R>& b) {
  const auto& h = b->h;
  Mat<R> M(b->dim, b->dim, h.kr->zero);
  auto setcol = [&](std::size_t j, const LieElem<R>& img) {
    auto cc = b->coords(img);
    for (std::size_t i = 0; i < b->dim; ++i) M(i, j) = cc[i];
  };
  for (std::size_t j = 0; j < b->dim; ++j) {
    LieElem<R> e = b->basis_elem(j);
    LieElem<R> img = lie_zero(h);
    img.l2 = e.lm2;
    img.lm2 = e.l2;
    img.a1 = e.am1;
    img.am1 = e.a1;
    img.fp = e.fm;
    img.fm = e.fp;
    setcol(j, img);
  }
  return LieAuto<R>{b, M};
}

// exp_+(g) = 1 + e1 + e2 + e3 + e4 as a matrix, assembled from the images of
// the generators A_1 and (t-tbar)_{-2}: phi on A_1 and on L_0 needs no
// divisions beyond 1/2, phi((t-tbar)_{-2}) is the only hard column. Over a
// 6-invertible base that column is the exponential series; in characteristic
// 3 it is the integral polynomial formula from the torsion-free lift.
template <class R>
LieAuto<R> exp_plus(const LieBasisPtr<R>& b, const GElem<R>& g) {
  const Hcns<R>& h = b->h;
  int p = RingTraits<R>::characteristic(h.kr->zero);
  if (p == 2)
    throw std::domain_error("exponential unsupported in characteristic 2");
  if (!g_member(h, g)) throw std::invalid_argument("exp_plus: not in G");
  const KRingPtr<R>& kr = h.kr;
  K<R> tmt = K<R>::t_minus_tbar(kr);
  R m4 = one_minus_4alpha(kr);
  AdG<R> ad(h, g);
  AElem<R> x = ad.x;

  LieElem<R> phi_sm2 = lie_zero(h);
  if (p == 0 || p >= 5) {
    phi_sm2 = ad.exp_apply(lie_grade_m2(h, kr->one));
  } else {
    // characteristic 3: integral closed forms + lifted e3 column
    if (!b->lift || !b->lift->ok)
      throw std::domain_error(
          "characteristic-3 exponential needs a torsion-free lift: " +
          (b->lift ? b->lift->reason : std::string("no lift")));
    phi_sm2.lm2 = kr->one;
    phi_sm2.am1 = x.scaled(tmt);                       // e1
    R half = ring_div(kr->one, ring_int(kr->one, 2));  // p odd
    AElem<R> tmtx = x.scaled(tmt);
    phi_sm2.fp = Mat<R>::identity(b->m, kr->zero).scaled(ad.sp * m4) +
                 V_matrix(h, x, tmtx).scaled(half);
    phi_sm2.fm = Mat<R>::identity(b->m, kr->zero).scaled(-(ad.sp * m4)) +
                 (-V_matrix(h, tmtx, x)).scaled(half);
    // e3: evaluate the lifted integer formulas at this element
    std::vector<R> vals;
    vals.push_back(g.a.x0());
    vals.push_back(g.a.x1());
    vals.push_back(g.u.x1());
    for (int i = 0; i < h.n; ++i) {
      vals.push_back(g.v.c[i].x0());
      vals.push_back(g.v.c[i].x1());
    }
    std::vector<R> e3c;
    e3c.reserve(b->lift->e3_coords.size());
    for (const auto& f : b->lift->e3_coords)
      e3c.push_back(eval_poly_in(f, vals, kr->zero));
    phi_sm2.a1 = a_from_coords(h, e3c);
    phi_sm2.l2 = nu(h, g);  // e4; the lift checked e4 == nu symbolically
  }

  Mat<R> M(b->dim, b->dim, kr->zero);
  auto setcol = [&](std::size_t j, const LieElem<R>& img) {
    auto cc = b->coords(img);
    for (std::size_t i = 0; i < b->dim; ++i) M(i, j) = cc[i];
  };
  // (t-tbar)_2 is fixed
  setcol(0, lie_grade2(h, kr->one));
  // A_1 columns: c + [x,c]_2
  std::vector<LieElem<R>> phi_a1(b->m, lie_zero(h));
  for (std::size_t k = 0; k < b->m; ++k) {
    AElem<R> c = a_basis_elem(h, k);
    LieElem<R> e = lie_grade1(h, c);
    e.l2 = skew_of_pair(h, x, c);
    phi_a1[k] = e;
    setcol(1 + k, e);
  }
  // A_{-1} columns: phi(c_{-1}) = [phi(x'_1), phi(s_{-2})],
  // x' = (t-tbar) c / (1-4alpha)
  std::vector<LieElem<R>> phi_am1(b->m, lie_zero(h));
  R m4inv = ring_div(kr->one, m4);
  for (std::size_t k = 0; k < b->m; ++k) {
    AElem<R> c = a_basis_elem(h, k);
    AElem<R> xp = c.scaled(tmt).scaled(K<R>::from_r(kr, m4inv));
    LieElem<R> e = lie_grade1(h, xp);
    e.l2 = skew_of_pair(h, x, xp);
    LieElem<R> img = bracket(h, e, phi_sm2);
    phi_am1[k] = img;
    setcol(1 + b->m + b->d0 + k, img);
  }
  // L_0 columns via their generator pairs
  for (std::size_t r = 0; r < b->d0; ++r) {
    auto [gi, gj] = b->l0_labels[r];
    LieElem<R> img = bracket(h, phi_a1[gi], phi_am1[gj]);
    setcol(1 + b->m + r, img);
  }
  // (t-tbar)_{-2} column
  setcol(b->dim - 1, phi_sm2);
  return LieAuto<R>{b, M};
}

template <class R>
LieAuto<R> exp_minus(const LieBasisPtr<R>& b, const GElem<R>& g) {
  LieAuto<R> io = iota_auto(b);
  LieAuto<R> ep = exp_plus(b, g);
  return io.compose(ep).compose(io);
}

// Applies exp_+(g) to (t-tbar)_{-2} and extracts the (t-tbar)_2 coefficient.
template <class R>
R nu_via_action(const LieBasisPtr<R>& b, const GElem<R>& g) {
  int p = RingTraits<R>::characteristic(b->h.kr->zero);
  if (p == 0 || p >= 5) {
    AdG<R> ad(b->h, g);
    return ad.exp_apply(lie_grade_m2(b->h, b->h.kr->one)).l2;
  }
  LieAuto<R> e = exp_plus(b, g);
  return e.apply(lie_grade_m2(b->h, b->h.kr->one)).l2;
}

// Membership of an endomorphism pair in instr(J), by exact row reduction.
template <class R>
bool instr_member(const Hcns<R>& h, const Mat<R>& fp, const Mat<R>& fm) {
  LieBasis<R> b(h);
  try {
    b.l0_coords(fp, fm);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

// Extracts the group element from a positive-unipotent automorphism matrix.
template <class R>
GElem<R> extract_gelem(const LieAuto<R>& aut) {
  const auto& b = *aut.basis;
  const Hcns<R>& h = b.h;
  const KRingPtr<R>& kr = h.kr;
  LieElem<R> img = aut.apply(lie_grade_m2(h, kr->one));
  K<R> tmt = K<R>::t_minus_tbar(kr);
  R m4inv = ring_div(kr->one, one_minus_4alpha(kr));
  // grade -1 component is (t-tbar) x
  AElem<R> x = img.am1.scaled(tmt).scaled(K<R>::from_r(kr, m4inv));
  // strip the V-part of the L_0 component to recover sigma'
  R half = ring_div(kr->one, ring_int(kr->one, 2));
  AElem<R> tmtx = x.scaled(tmt);
  Mat<R> vpart = V_matrix(h, x, tmtx).scaled(half);
  Mat<R> rest = img.fp - vpart;
  // rest = sigma' (1-4alpha) Id
  R sp = rest(0, 0) * m4inv;
  R q = sp + sp;
  // membership forces u = ((n(a)+T(v,v)-q)/2, q)
  GElem<R> g{x.k, x.j, K<R>::zero(kr)};
  R tr = knorm(g.a) + eval_T(h, g.v, g.v).x0();
  g.u = K<R>(kr, (tr - q) * half, q);
  return g;
}

}  // namespace hcns
