#pragma once
#include <memory>
#include <numeric>
#include <optional>

#include "hcnslab/poly.hpp"

namespace hcns {

// Polynomial ring localized at a declared multiplicative monoid: denominators
// are products of powers of designated generator polynomials only (the cases
// needed here are 1-4*alpha and, when enabled, the quartic norm). Equality is
// decided by cross-multiplication, which is valid because the ambient
// polynomial ring is a domain.
template <class C>
struct LocRing {
  VarTablePtr tab;
  std::vector<Poly<C>> gens;
  std::vector<std::string> gen_names;
};

template <class C>
using LocRingPtr = std::shared_ptr<const LocRing<C>>;

template <class C>
LocRingPtr<C> make_loc_ring(VarTablePtr tab, std::vector<Poly<C>> gens = {},
                            std::vector<std::string> names = {}) {
  auto r = std::make_shared<LocRing<C>>();
  r->tab = std::move(tab);
  r->gens = std::move(gens);
  r->gen_names = std::move(names);
  return r;
}

// Extends a localized ring with fresh variables (generators reindexed).
template <class C>
LocRingPtr<C> extend_loc_ring(const LocRingPtr<C>& r,
                              const std::vector<std::string>& extra) {
  auto tab = extend_vars(r->tab, extra);
  std::vector<Poly<C>> gens;
  gens.reserve(r->gens.size());
  for (const auto& g : r->gens) gens.push_back(g.reindexed(tab));
  return make_loc_ring<C>(tab, std::move(gens), r->gen_names);
}

template <class C>
class Loc {
 public:
  Loc() = default;
  Loc(LocRingPtr<C> ring, Poly<C> num)
      : ring_(std::move(ring)),
        num_(std::move(num)),
        den_(ring_->gens.size(), 0) {}
  Loc(LocRingPtr<C> ring, Poly<C> num, std::vector<std::uint32_t> den)
      : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {}

  static Loc zero(const LocRingPtr<C>& r) {
    return Loc(r, Poly<C>::zero(r->tab));
  }
  static Loc one(const LocRingPtr<C>& r) {
    return Loc(r, Poly<C>::constant(r->tab, C(1)));
  }
  static Loc constant(const LocRingPtr<C>& r, C c) {
    return Loc(r, Poly<C>::constant(r->tab, std::move(c)));
  }
  static Loc variable(const LocRingPtr<C>& r, std::size_t i) {
    return Loc(r, Poly<C>::variable(r->tab, i));
  }

  const LocRingPtr<C>& ring() const { return ring_; }
  const Poly<C>& num() const { return num_; }
  const std::vector<std::uint32_t>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    for (auto e : den_)
      if (e) return false;
    return true;
  }

  Loc operator-() const { return Loc(ring_, -num_, den_); }

  Loc operator+(const Loc& o) const { return combined(o, false); }
  Loc operator-(const Loc& o) const { return combined(o, true); }
  Loc operator*(const Loc& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    std::vector<std::uint32_t> d = den_;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.den_[i];
    return normalized(ring_, num_ * o.num_, std::move(d));
  }
  Loc& operator+=(const Loc& o) { return *this = *this + o; }
  Loc& operator-=(const Loc& o) { return *this = *this - o; }
  Loc& operator*=(const Loc& o) { return *this = *this * o; }

  bool operator==(const Loc& o) const {
    check(o);
    if (den_ == o.den_) return num_ == o.num_;
    // strip common denominator part, then cross-multiply
    std::vector<std::uint32_t> da = den_, db = o.den_;
    for (std::size_t i = 0; i < da.size(); ++i) {
      std::uint32_t m = std::min(da[i], db[i]);
      da[i] -= m;
      db[i] -= m;
    }
    return num_ * gen_pow(db) == o.num_ * gen_pow(da);
  }
  bool operator!=(const Loc& o) const { return !(*this == o); }

  // Division by the i-th designated generator.
  Loc div_gen(std::size_t i, std::uint32_t k = 1) const {
    std::vector<std::uint32_t> d = den_;
    d[i] += k;
    return normalized(ring_, num_, std::move(d));
  }

  std::optional<Loc> inverse() const {
    if (is_zero()) return std::nullopt;
    // numerator must be (unit) * prod gens^k
    Poly<C> rest = num_;
    std::vector<std::uint32_t> k(ring_->gens.size(), 0);
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < ring_->gens.size(); ++i) {
        if (auto q = rest.divexact(ring_->gens[i])) {
          rest = std::move(*q);
          ++k[i];
          progress = true;
        }
      }
    }
    if (!rest.is_constant()) return std::nullopt;
    C c = rest.constant_value();
    if (!CoeffOps<C>::is_unit(c)) return std::nullopt;
    auto cinv = CoeffOps<C>::try_div(C(1), c);
    Poly<C> newnum = gen_pow(den_).scaled(*cinv);
    return normalized(ring_, std::move(newnum), k);
  }

  std::string str() const {
    std::string s = num_.str();
    std::string d;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (!den_[i]) continue;
      if (!d.empty()) d += "*";
      d += "(" + ring_->gen_names[i] + ")";
      if (den_[i] > 1) d += "^" + std::to_string(den_[i]);
    }
    if (d.empty()) return s;
    return "(" + s + ")/(" + d + ")";
  }

  Poly<C> gen_pow(const std::vector<std::uint32_t>& e) const {
    Poly<C> r = Poly<C>::constant(ring_->tab, C(1));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) r *= ring_->gens[i].pow(e[i]);
    return r;
  }

  // Clears stray generator factors out of the numerator (keeps values small
  // when exact divisions happen to be possible).
  static Loc normalized(const LocRingPtr<C>& ring, Poly<C> num,
                        std::vector<std::uint32_t> den) {
    if (num.is_zero()) return Loc(ring, std::move(num),
                                  std::vector<std::uint32_t>(den.size(), 0));
    for (std::size_t i = 0; i < den.size(); ++i) {
      while (den[i] > 0) {
        auto q = num.divexact(ring->gens[i]);
        if (!q) break;
        num = std::move(*q);
        --den[i];
      }
    }
    return Loc(ring, std::move(num), std::move(den));
  }

 private:
  void check(const Loc& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->tab->same_as(*o.ring_->tab)))
      throw std::invalid_argument("localized ring mismatch");
  }

  Loc combined(const Loc& o, bool subtract) const {
    check(o);
    std::vector<std::uint32_t> d(den_.size());
    std::vector<std::uint32_t> ea(den_.size()), eb(den_.size());
    for (std::size_t i = 0; i < den_.size(); ++i) {
      d[i] = std::max(den_[i], o.den_[i]);
      ea[i] = d[i] - den_[i];
      eb[i] = d[i] - o.den_[i];
    }
    Poly<C> na = num_ * gen_pow(ea);
    Poly<C> nb = o.num_ * gen_pow(eb);
    return normalized(ring_, subtract ? na - nb : na + nb, std::move(d));
  }

  LocRingPtr<C> ring_;
  Poly<C> num_;
  std::vector<std::uint32_t> den_;
};

using SymZ = Loc<Int>;
using SymQ = Loc<Rat>;

// Exact embedding Z -> Q coefficients, ring structure preserved.
inline SymQ to_rat(const LocRingPtr<Rat>& rq, const SymZ& a) {
  PolyQ num(rq->tab);
  for (std::size_t t = 0; t < a.num().nterms(); ++t) {
    std::span<const std::uint8_t> e(a.num().exps(t), a.num().nvars());
    num += PolyQ::monomial(rq->tab, e, Rat(a.num().coeff(t)));
  }
  return SymQ(rq, std::move(num), a.den());
}

// Casts back Q -> Z; requires every coefficient to be an integer.
inline std::optional<SymZ> to_int_checked(const LocRingPtr<Int>& rz,
                                          const SymQ& a) {
  PolyZ num(rz->tab);
  for (std::size_t t = 0; t < a.num().nterms(); ++t) {
    if (!rat_is_integer(a.num().coeff(t))) return std::nullopt;
    std::span<const std::uint8_t> e(a.num().exps(t), a.num().nvars());
    num += PolyZ::monomial(rz->tab, e, Int(a.num().coeff(t).get_num()));
  }
  return SymZ(rz, std::move(num), a.den());
}

}  // namespace hcns
