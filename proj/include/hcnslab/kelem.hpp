#pragma once
#include <memory>

#include "hcnslab/ring.hpp"

namespace hcns {

// K = R[t]/(t^2 - t + alpha) with the involution fixing R and sending
// t to 1 - t. Elements are x0 + x1*t.
template <class R>
struct KRing {
  R alpha;
  R zero;
  R one;
};

template <class R>
using KRingPtr = std::shared_ptr<const KRing<R>>;

template <class R>
KRingPtr<R> make_kring(R alpha) {
  auto kr = std::make_shared<KRing<R>>();
  kr->zero = ring_zero(alpha);
  kr->one = ring_one(alpha);
  kr->alpha = std::move(alpha);
  return kr;
}

// 1 - 4*alpha, the discriminant-like unit required by the construction.
template <class R>
R one_minus_4alpha(const KRingPtr<R>& kr) {
  return kr->one - ring_int(kr->one, 4) * kr->alpha;
}

template <class R>
class K {
 public:
  K() = default;
  K(KRingPtr<R> kr, R x0, R x1)
      : kr_(std::move(kr)), x0_(std::move(x0)), x1_(std::move(x1)) {}

  static K zero(const KRingPtr<R>& kr) { return K(kr, kr->zero, kr->zero); }
  static K one(const KRingPtr<R>& kr) { return K(kr, kr->one, kr->zero); }
  static K t(const KRingPtr<R>& kr) { return K(kr, kr->zero, kr->one); }
  // t - tbar = 2t - 1
  static K t_minus_tbar(const KRingPtr<R>& kr) {
    return K(kr, -kr->one, ring_int(kr->one, 2));
  }
  static K from_r(const KRingPtr<R>& kr, R v) {
    return K(kr, std::move(v), kr->zero);
  }

  const KRingPtr<R>& kring() const { return kr_; }
  const R& x0() const { return x0_; }
  const R& x1() const { return x1_; }
  bool is_zero() const {
    return RingTraits<R>::is_zero(x0_) && RingTraits<R>::is_zero(x1_);
  }
  // zero t-coordinate, i.e. the element lies in R
  bool is_real() const { return RingTraits<R>::is_zero(x1_); }

  K operator-() const { return K(kr_, -x0_, -x1_); }
  K operator+(const K& o) const { return K(kr_, x0_ + o.x0_, x1_ + o.x1_); }
  K operator-(const K& o) const { return K(kr_, x0_ - o.x0_, x1_ - o.x1_); }
  // (a0 + a1 t)(b0 + b1 t) with t^2 = t - alpha
  K operator*(const K& o) const {
    R prod11 = x1_ * o.x1_;
    return K(kr_, x0_ * o.x0_ - kr_->alpha * prod11,
             x0_ * o.x1_ + x1_ * o.x0_ + prod11);
  }
  K scaled(const R& r) const { return K(kr_, x0_ * r, x1_ * r); }
  K& operator+=(const K& o) { return *this = *this + o; }
  K& operator-=(const K& o) { return *this = *this - o; }
  K& operator*=(const K& o) { return *this = *this * o; }
  bool operator==(const K& o) const { return x0_ == o.x0_ && x1_ == o.x1_; }
  bool operator!=(const K& o) const { return !(*this == o); }

  std::string str() const {
    return "[" + RingTraits<R>::str(x0_) + ", " + RingTraits<R>::str(x1_) +
           "]";
  }

 private:
  KRingPtr<R> kr_;
  R x0_, x1_;
};

// x0 + x1*t  ->  (x0 + x1) - x1*t
template <class R>
K<R> involute(const K<R>& k) {
  return K<R>(k.kring(), k.x0() + k.x1(), -k.x1());
}

// k * kbar = x0^2 + x0 x1 + alpha x1^2, lands in R
template <class R>
R knorm(const K<R>& k) {
  return k.x0() * k.x0() + k.x0() * k.x1() +
         k.kring()->alpha * k.x1() * k.x1();
}

// k + kbar = 2 x0 + x1, lands in R
template <class R>
R ktrace(const K<R>& k) {
  return k.x0() + k.x0() + k.x1();
}

// kbar / n(k) when n(k) is invertible in R; nullopt otherwise.
template <class R>
std::optional<K<R>> kinvert(const K<R>& k) {
  auto ninv = RingTraits<R>::invert(knorm(k));
  if (!ninv) return std::nullopt;
  return involute(k).scaled(*ninv);
}

// The coefficient c with k = c*(t - tbar); requires k skew (kbar = -k).
template <class R>
R skew_coefficient(const K<R>& k) {
  if (!(k.x0() + k.x0() + k.x1() == ring_zero(k.x0())))
    throw std::logic_error("skew_coefficient: element is not skew");
  return -k.x0();
}

}  // namespace hcns
