#pragma once
#include "hcnslab/hcns.hpp"
#include "hcnslab/matrix.hpp"

namespace hcns {

// Element of the associated structurable algebra A = K + J.
template <class R>
struct AElem {
  K<R> k;
  JVec<R> j;

  bool is_zero() const { return k.is_zero() && j.is_zero(); }
  AElem operator-() const { return AElem{-k, -j}; }
  AElem operator+(const AElem& o) const { return AElem{k + o.k, j + o.j}; }
  AElem operator-(const AElem& o) const { return AElem{k - o.k, j - o.j}; }
  AElem& operator+=(const AElem& o) { return *this = *this + o; }
  AElem& operator-=(const AElem& o) { return *this = *this - o; }
  bool operator==(const AElem& o) const { return k == o.k && j == o.j; }
  bool operator!=(const AElem& o) const { return !(*this == o); }
  // K-scalar action s*(k,j) = (s k, s j)
  AElem scaled(const K<R>& s) const { return AElem{s * k, j.scaled(s)}; }
  std::string str() const { return "(" + k.str() + ", " + j.str() + ")"; }
};

template <class R>
AElem<R> a_zero(const Hcns<R>& h) {
  return AElem<R>{K<R>::zero(h.kr), h.jzero()};
}
template <class R>
AElem<R> a_one(const Hcns<R>& h) {
  return AElem<R>{K<R>::one(h.kr), h.jzero()};
}
template <class R>
AElem<R> a_from_g(const Hcns<R>& h, const GElem<R>& g) {
  (void)h;
  return AElem<R>{g.a, g.v};
}

// (k1,j1)(k2,j2) = (k1 k2 + T(j1,j2), k1 j2 + conj(k2) j1 + j1 x j2)
template <class R>
AElem<R> struct_mul(const Hcns<R>& h, const AElem<R>& p, const AElem<R>& q) {
  return AElem<R>{p.k * q.k + eval_T(h, p.j, q.j),
                  q.j.scaled(p.k) + p.j.scaled(involute(q.k)) +
                      cross(h, p.j, q.j)};
}

// involution (k, j) -> (conj k, j)
template <class R>
AElem<R> struct_conj(const AElem<R>& p) {
  return AElem<R>{involute(p.k), p.j};
}

// V_{a,b} c = -(a conj(b)) c - (c conj(b)) a + (c conj(a)) b
template <class R>
AElem<R> V_op(const Hcns<R>& h, const AElem<R>& a, const AElem<R>& b,
              const AElem<R>& c) {
  AElem<R> ab = struct_mul(h, a, struct_conj(b));
  AElem<R> cb = struct_mul(h, c, struct_conj(b));
  AElem<R> ca = struct_mul(h, c, struct_conj(a));
  return -struct_mul(h, ab, c) - struct_mul(h, cb, a) + struct_mul(h, ca, b);
}

// ---------------------------------------------------------------------------
// R-linear coordinates on A: basis [1, t, e_0, t e_0, ..., e_{n-1}, t e_{n-1}],
// R-rank 2 + 2n. All endomorphism matrices below act on these coordinates.
// ---------------------------------------------------------------------------

template <class R>
std::size_t a_dim(const Hcns<R>& h) {
  return 2 + 2 * (std::size_t)h.n;
}

template <class R>
std::vector<R> a_coords(const Hcns<R>& h, const AElem<R>& p) {
  std::vector<R> v;
  v.reserve(a_dim(h));
  v.push_back(p.k.x0());
  v.push_back(p.k.x1());
  for (int i = 0; i < h.n; ++i) {
    v.push_back(p.j.c[i].x0());
    v.push_back(p.j.c[i].x1());
  }
  return v;
}

template <class R>
AElem<R> a_from_coords(const Hcns<R>& h, const std::vector<R>& v) {
  AElem<R> p = a_zero(h);
  p.k = K<R>(h.kr, v[0], v[1]);
  for (int i = 0; i < h.n; ++i)
    p.j.c[i] = K<R>(h.kr, v[2 + 2 * i], v[3 + 2 * i]);
  return p;
}

template <class R>
AElem<R> a_basis_elem(const Hcns<R>& h, std::size_t idx) {
  std::vector<R> v(a_dim(h), h.kr->zero);
  v[idx] = h.kr->one;
  return a_from_coords(h, v);
}

// Matrix of c -> V_{a,b} c on the A-coordinates.
template <class R>
Mat<R> V_matrix(const Hcns<R>& h, const AElem<R>& a, const AElem<R>& b) {
  std::size_t m = a_dim(h);
  Mat<R> M(m, m, h.kr->zero);
  for (std::size_t col = 0; col < m; ++col) {
    AElem<R> img = V_op(h, a, b, a_basis_elem(h, col));
    std::vector<R> coords = a_coords(h, img);
    for (std::size_t row = 0; row < m; ++row) M(row, col) = coords[row];
  }
  return M;
}

// Matrix of left multiplication c -> p c.
template <class R>
Mat<R> lmul_matrix(const Hcns<R>& h, const AElem<R>& p) {
  std::size_t m = a_dim(h);
  Mat<R> M(m, m, h.kr->zero);
  for (std::size_t col = 0; col < m; ++col) {
    AElem<R> img = struct_mul(h, p, a_basis_elem(h, col));
    std::vector<R> coords = a_coords(h, img);
    for (std::size_t row = 0; row < m; ++row) M(row, col) = coords[row];
  }
  return M;
}

}  // namespace hcns
