#pragma once
#include <optional>
#include <string>

#include "hcnslab/fq.hpp"
#include "hcnslab/localized.hpp"

namespace hcns {

// Uniform interface over the scalar tower. Every base ring element is an
// immutable value that knows its own ring, so generic code only needs a
// sample element to produce constants.
template <class R>
struct RingTraits;

template <class C>
struct RingTraits<Loc<C>> {
  static Loc<C> zero(const Loc<C>& like) { return Loc<C>::zero(like.ring()); }
  static Loc<C> one(const Loc<C>& like) { return Loc<C>::one(like.ring()); }
  static Loc<C> from_int(const Loc<C>& like, long v) {
    return Loc<C>::constant(like.ring(), C(v));
  }
  static Loc<C> from_bigint(const Loc<C>& like, const Int& v) {
    return Loc<C>::constant(like.ring(), C(v));
  }
  static bool is_zero(const Loc<C>& a) { return a.is_zero(); }
  static std::optional<Loc<C>> invert(const Loc<C>& a) { return a.inverse(); }
  static int characteristic(const Loc<C>&) { return 0; }
  static std::string str(const Loc<C>& a) { return a.str(); }
  static std::uint64_t complexity(const Loc<C>& a) { return a.num().nterms(); }
  static std::string witness(const Loc<C>& a) {
    return a.num().leading_monomial_str();
  }
};

// Fq as a polynomial coefficient type (used for generic-point verification
// over finite-field instances).
template <>
struct CoeffOps<Fq> {
  static bool is_zero(const Fq& a) { return a.is_zero(); }
  static bool is_unit(const Fq& a) { return !a.is_zero(); }
  static std::optional<Fq> try_div(const Fq& a, const Fq& b) {
    if (b.is_zero()) return std::nullopt;
    if (!b.has_field()) {
      // pending constant divisor: only +-1 is safely invertible fieldless
      if (b == Fq(1)) return a;
      if (b == Fq(-1)) return -a;
      if (!a.has_field()) return std::nullopt;
      auto inv = b.materialized(a.field()).inverse();
      if (!inv) return std::nullopt;
      return a * *inv;
    }
    auto inv = b.inverse();
    if (!inv) return std::nullopt;
    return a * *inv;
  }
  static std::string str(const Fq& a) { return a.str(); }
};

template <>
struct RingTraits<Fq> {
  static Fq zero(const Fq& like) {
    return like.has_field() ? Fq::zero(like.field()) : Fq(0);
  }
  static Fq one(const Fq& like) {
    return like.has_field() ? Fq::one(like.field()) : Fq(1);
  }
  static Fq from_int(const Fq& like, long v) {
    return like.has_field() ? Fq::from_int(like.field(), Int(v)) : Fq(v);
  }
  static Fq from_bigint(const Fq& like, const Int& v) {
    if (!like.has_field()) throw std::logic_error("from_bigint: no field");
    return Fq::from_int(like.field(), v);
  }
  static bool is_zero(const Fq& a) { return a.is_zero(); }
  static std::optional<Fq> invert(const Fq& a) { return a.inverse(); }
  static int characteristic(const Fq& a) { return (int)a.field()->p(); }
  static std::string str(const Fq& a) { return a.str(); }
  static std::uint64_t complexity(const Fq&) { return 1; }
  static std::string witness(const Fq& a) { return a.str(); }
};

template <>
struct RingTraits<Rat> {
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static Rat from_int(const Rat&, long v) { return Rat(v); }
  static Rat from_bigint(const Rat&, const Int& v) { return Rat(v); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static std::optional<Rat> invert(const Rat& a) {
    if (a == 0) return std::nullopt;
    return Rat(1 / a);
  }
  static int characteristic(const Rat&) { return 0; }
  static std::string str(const Rat& a) { return rat_str(a); }
  static std::uint64_t complexity(const Rat&) { return 1; }
  static std::string witness(const Rat& a) { return rat_str(a); }
};

template <class R>
R ring_zero(const R& like) {
  return RingTraits<R>::zero(like);
}
template <class R>
R ring_one(const R& like) {
  return RingTraits<R>::one(like);
}
template <class R>
R ring_int(const R& like, long v) {
  return RingTraits<R>::from_int(like, v);
}

// Division by an invertible scalar; throws when b is not a unit.
template <class R>
R ring_div(const R& a, const R& b) {
  auto inv = RingTraits<R>::invert(b);
  if (!inv) throw std::domain_error("scalar not invertible: " +
                                    RingTraits<R>::str(b));
  return a * *inv;
}

}  // namespace hcns
