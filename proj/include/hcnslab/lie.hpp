#pragma once
#include "hcnslab/structurable.hpp"

namespace hcns {

// Element of the 5-graded Lie algebra
//   L = R(t-tbar)_2 + A_1 + instr(J) + A_{-1} + R(t-tbar)_{-2}.
// Grade +-2 parts are stored as the coefficient of (t-tbar); the L_0 part is
// stored concretely as the pair of endomorphism matrices (action on A_1,
// action on A_{-1}) in A-coordinates.
template <class R>
struct LieElem {
  R l2;
  AElem<R> a1;
  Mat<R> fp, fm;
  AElem<R> am1;
  R lm2;

  LieElem operator+(const LieElem& o) const {
    return LieElem{l2 + o.l2, a1 + o.a1, fp + o.fp,
                   fm + o.fm, am1 + o.am1, lm2 + o.lm2};
  }
  LieElem operator-(const LieElem& o) const {
    return LieElem{l2 - o.l2, a1 - o.a1, fp - o.fp,
                   fm - o.fm, am1 - o.am1, lm2 - o.lm2};
  }
  LieElem operator-() const {
    return LieElem{-l2, -a1, -fp, -fm, -am1, -lm2};
  }
  LieElem scaled(const R& s) const {
    return LieElem{l2 * s,      a1.scaled(K<R>(a1.k.kring(), s, ring_zero(s))),
                   fp.scaled(s), fm.scaled(s),
                   am1.scaled(K<R>(a1.k.kring(), s, ring_zero(s))), lm2 * s};
  }
  bool operator==(const LieElem& o) const {
    return l2 == o.l2 && a1 == o.a1 && fp == o.fp && fm == o.fm &&
           am1 == o.am1 && lm2 == o.lm2;
  }
  bool operator!=(const LieElem& o) const { return !(*this == o); }
  bool is_zero() const {
    return RingTraits<R>::is_zero(l2) && a1.is_zero() && fp.is_zero() &&
           fm.is_zero() && am1.is_zero() && RingTraits<R>::is_zero(lm2);
  }
};

template <class R>
LieElem<R> lie_zero(const Hcns<R>& h) {
  std::size_t m = a_dim(h);
  return LieElem<R>{h.kr->zero,        a_zero(h), Mat<R>(m, m, h.kr->zero),
                    Mat<R>(m, m, h.kr->zero), a_zero(h), h.kr->zero};
}

template <class R>
LieElem<R> lie_grade2(const Hcns<R>& h, R c) {
  LieElem<R> e = lie_zero(h);
  e.l2 = std::move(c);
  return e;
}
template <class R>
LieElem<R> lie_grade_m2(const Hcns<R>& h, R c) {
  LieElem<R> e = lie_zero(h);
  e.lm2 = std::move(c);
  return e;
}
template <class R>
LieElem<R> lie_grade1(const Hcns<R>& h, AElem<R> a) {
  LieElem<R> e = lie_zero(h);
  e.a1 = std::move(a);
  return e;
}
template <class R>
LieElem<R> lie_grade_m1(const Hcns<R>& h, AElem<R> a) {
  LieElem<R> e = lie_zero(h);
  e.am1 = std::move(a);
  return e;
}
template <class R>
LieElem<R> lie_instr_pair(const Hcns<R>& h, Mat<R> fp, Mat<R> fm) {
  LieElem<R> e = lie_zero(h);
  e.fp = std::move(fp);
  e.fm = std::move(fm);
  return e;
}
// (V_{a,b}, -V_{b,a}) as an L_0 element.
template <class R>
LieElem<R> lie_v_pair(const Hcns<R>& h, const AElem<R>& a, const AElem<R>& b) {
  return lie_instr_pair(h, V_matrix(h, a, b), -V_matrix(h, b, a));
}

// skew coefficient of a conj(b) - b conj(a)  (J-parts cancel)
template <class R>
R skew_of_pair(const Hcns<R>& h, const AElem<R>& a, const AElem<R>& b) {
  AElem<R> p =
      struct_mul(h, a, struct_conj(b)) - struct_mul(h, b, struct_conj(a));
  if (!p.j.is_zero())
    throw std::logic_error("skew_of_pair: nonzero J component");
  return skew_coefficient(p.k);
}

template <class R>
AElem<R> mat_apply_a(const Hcns<R>& h, const Mat<R>& m, const AElem<R>& a) {
  return a_from_coords(h, m.apply(a_coords(h, a)));
}

// The bracket, by the grading case table. [a_1, b_{-1}] = (V_{a,b}, -V_{b,a}),
// [y_{-1}, s_2] = (sy)_1, [x_1, s_{-2}] = (sx)_{-1},
// [s_2, s'_{-2}] = s s' (Id, -Id), and L_0 brackets act through the stored
// matrices; L_0 against grade +-2 goes through (t-tbar) = [t, tbar].
template <class R>
LieElem<R> bracket(const Hcns<R>& h, const LieElem<R>& X, const LieElem<R>& Y) {
  const KRingPtr<R>& kr = h.kr;
  K<R> tmt = K<R>::t_minus_tbar(kr);
  AElem<R> tA = AElem<R>{K<R>::t(kr), h.jzero()};
  AElem<R> tbA = AElem<R>{involute(K<R>::t(kr)), h.jzero()};
  R m4 = one_minus_4alpha(kr);
  LieElem<R> out = lie_zero(h);

  // grade 2
  out.l2 = skew_of_pair(h, X.a1, Y.a1);
  if (!RingTraits<R>::is_zero(Y.l2)) {
    out.l2 = out.l2 + Y.l2 * (skew_of_pair(h, mat_apply_a(h, X.fp, tA), tbA) +
                              skew_of_pair(h, tA, mat_apply_a(h, X.fp, tbA)));
  }
  if (!RingTraits<R>::is_zero(X.l2)) {
    out.l2 = out.l2 - X.l2 * (skew_of_pair(h, mat_apply_a(h, Y.fp, tA), tbA) +
                              skew_of_pair(h, tA, mat_apply_a(h, Y.fp, tbA)));
  }

  // grade 1
  out.a1 = mat_apply_a(h, X.fp, Y.a1) - mat_apply_a(h, Y.fp, X.a1);
  if (!RingTraits<R>::is_zero(Y.l2))
    out.a1 += X.am1.scaled(tmt).scaled(K<R>::from_r(kr, Y.l2));
  if (!RingTraits<R>::is_zero(X.l2))
    out.a1 -= Y.am1.scaled(tmt).scaled(K<R>::from_r(kr, X.l2));

  // grade 0
  std::size_t m = a_dim(h);
  Mat<R> fp = X.fp * Y.fp - Y.fp * X.fp;
  Mat<R> fm = X.fm * Y.fm - Y.fm * X.fm;
  if (!X.a1.is_zero() && !Y.am1.is_zero()) {
    fp = fp + V_matrix(h, X.a1, Y.am1);
    fm = fm - V_matrix(h, Y.am1, X.a1);
  }
  if (!Y.a1.is_zero() && !X.am1.is_zero()) {
    fp = fp - V_matrix(h, Y.a1, X.am1);
    fm = fm + V_matrix(h, X.am1, Y.a1);
  }
  R c0 = X.l2 * Y.lm2 - X.lm2 * Y.l2;
  if (!RingTraits<R>::is_zero(c0)) {
    R s = c0 * m4;
    Mat<R> id = Mat<R>::identity(m, kr->zero).scaled(s);
    fp = fp + id;
    fm = fm - id;
  }
  out.fp = std::move(fp);
  out.fm = std::move(fm);

  // grade -1
  out.am1 = mat_apply_a(h, X.fm, Y.am1) - mat_apply_a(h, Y.fm, X.am1);
  if (!RingTraits<R>::is_zero(Y.lm2))
    out.am1 += X.a1.scaled(tmt).scaled(K<R>::from_r(kr, Y.lm2));
  if (!RingTraits<R>::is_zero(X.lm2))
    out.am1 -= Y.a1.scaled(tmt).scaled(K<R>::from_r(kr, X.lm2));

  // grade -2
  out.lm2 = skew_of_pair(h, X.am1, Y.am1);
  if (!RingTraits<R>::is_zero(Y.lm2)) {
    out.lm2 =
        out.lm2 + Y.lm2 * (skew_of_pair(h, mat_apply_a(h, X.fm, tA), tbA) +
                           skew_of_pair(h, tA, mat_apply_a(h, X.fm, tbA)));
  }
  if (!RingTraits<R>::is_zero(X.lm2)) {
    out.lm2 =
        out.lm2 - X.lm2 * (skew_of_pair(h, mat_apply_a(h, Y.fm, tA), tbA) +
                           skew_of_pair(h, tA, mat_apply_a(h, Y.fm, tbA)));
  }
  return out;
}

// Membership of an endomorphism pair in the span of (V_{a,b}, -V_{b,a});
// exact linear algebra over a field.
template <class R>
bool instr_member(const Hcns<R>& h, const Mat<R>& fp, const Mat<R>& fm);

// ad(x_1 + s_2) with x = (a,v), s = (u - conj u)/2, as a map on L. Defined
// whenever 2 is invertible (the exponential itself needs more; see lieauto).
template <class R>
struct AdG {
  const Hcns<R>& h;
  AElem<R> x;
  R sp;  // sigma': s = sp * (t - tbar)

  AdG(const Hcns<R>& hh, const GElem<R>& g)
      : h(hh), x{g.a, g.v}, sp(ring_div(g.u.x1(), ring_int(hh.kr->one, 2))) {}

  LieElem<R> d1(const LieElem<R>& z) const {
    return bracket(h, lie_grade1(h, x), z);
  }
  LieElem<R> d2(const LieElem<R>& z) const {
    return bracket(h, lie_grade2(h, sp), z);
  }
  LieElem<R> d(const LieElem<R>& z) const { return d1(z) + d2(z); }

  // exp(ad) z = sum_{k<=4} D^k z / k!  (needs 1/2, 1/6, 1/24)
  LieElem<R> exp_apply(const LieElem<R>& z) const {
    LieElem<R> acc = z;
    LieElem<R> cur = z;
    long fact = 1;
    for (int k = 1; k <= 4; ++k) {
      cur = d(cur);
      fact *= k;
      if (cur.is_zero()) break;
      acc = acc + cur.scaled(
                      ring_div(h.kr->one, ring_int(h.kr->one, fact)));
    }
    return acc;
  }
};

}  // namespace hcns
