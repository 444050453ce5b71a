#pragma once
#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcnslab/bigint.hpp"

namespace hcns {

// F_{p^d} with an explicit irreducible monic modulus over F_p. Elements are
// coefficient vectors of length d in the residue class ring F_p[th]/(modulus).
class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

class FqField : public std::enable_shared_from_this<FqField> {
 public:
  static FqFieldPtr make(std::uint64_t p, std::uint32_t d);
  static FqFieldPtr make_with_modulus(std::uint64_t p,
                                      std::vector<std::uint64_t> modulus);

  std::uint64_t p() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint64_t order() const { return q_; }  // p^d
  // modulus is monic of degree d; mod_[i] is the coefficient of th^i, i < d,
  // stored so that th^d = -sum_i mod_[i] th^i.
  const std::vector<std::uint64_t>& modulus_low() const { return mod_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p_;
  }
  std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
  std::uint64_t inv_mod_p(std::uint64_t a) const;

 private:
  FqField(std::uint64_t p, std::uint32_t d, std::vector<std::uint64_t> mod);
  std::uint64_t p_;
  std::uint32_t d_;
  std::uint64_t q_;
  std::vector<std::uint64_t> mod_;
};

// A field element, or a small "pending" integer constant when no field is
// attached yet (generic polynomial code manufactures 0/1/-1 that way; the
// constant is materialized as soon as it meets a real element).
class Fq {
 public:
  Fq() = default;
  Fq(long v) : pend_(v) {}  // NOLINT: implicit by design
  Fq(FqFieldPtr f, std::vector<std::uint64_t> c)
      : f_(std::move(f)), c_(std::move(c)) {
    assert(c_.size() == f_->degree());
  }

  static Fq zero(const FqFieldPtr& f) {
    return Fq(f, std::vector<std::uint64_t>(f->degree(), 0));
  }
  static Fq one(const FqFieldPtr& f) { return from_int(f, 1); }
  static Fq from_int(const FqFieldPtr& f, const Int& v) {
    Int r = v % Int((unsigned long)f->p());
    if (r < 0) r += Int((unsigned long)f->p());
    std::vector<std::uint64_t> c(f->degree(), 0);
    c[0] = r.get_ui();
    return Fq(f, c);
  }
  // index in [0, q): base-p digits, c_[0] least significant.
  static Fq from_index(const FqFieldPtr& f, std::uint64_t idx) {
    std::vector<std::uint64_t> c(f->degree());
    for (std::uint32_t i = 0; i < f->degree(); ++i) {
      c[i] = idx % f->p();
      idx /= f->p();
    }
    return Fq(f, c);
  }
  std::uint64_t index() const {
    if (!f_) throw std::logic_error("index() on pending constant");
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * f_->p() + c_[i];
    return idx;
  }

  const FqFieldPtr& field() const { return f_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool has_field() const { return (bool)f_; }
  bool is_zero() const {
    if (!f_) return pend_ == 0;
    for (auto v : c_)
      if (v) return false;
    return true;
  }

  Fq materialized(const FqFieldPtr& f) const {
    return f_ ? *this : from_int(f, Int(pend_));
  }

  Fq operator-() const {
    if (!f_) return Fq(-pend_);
    Fq r = *this;
    for (auto& v : r.c_) v = f_->neg(v);
    return r;
  }
  Fq operator+(const Fq& o) const {
    if (!f_ && !o.f_) return Fq(pend_ + o.pend_);
    check_compat(o);
    const FqFieldPtr& f = f_ ? f_ : o.f_;
    Fq a = materialized(f), b = o.materialized(f);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      a.c_[i] = f->add(a.c_[i], b.c_[i]);
    return a;
  }
  Fq operator-(const Fq& o) const { return *this + (-o); }
  Fq operator*(const Fq& o) const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  bool operator==(const Fq& o) const {
    if (!f_ && !o.f_) return pend_ == o.pend_;
    const FqFieldPtr& f = f_ ? f_ : o.f_;
    return materialized(f).c_ == o.materialized(f).c_;
  }
  bool operator!=(const Fq& o) const { return !(*this == o); }

  std::optional<Fq> inverse() const;

  std::string str() const {
    if (!f_) return std::to_string(pend_);
    if (f_->degree() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
  }

 private:
  void check_compat(const Fq& o) const {
    if (f_ && o.f_ && f_ != o.f_ &&
        (f_->p() != o.f_->p() || f_->modulus_low() != o.f_->modulus_low()))
      throw std::invalid_argument("finite field mismatch");
  }

  FqFieldPtr f_;
  std::vector<std::uint64_t> c_;
  long pend_ = 0;
};

// Searches for alpha in Fq (deterministic enumeration order) such that
// t^2 - t + alpha is irreducible over Fq, i.e. 1 - 4*alpha is a non-square.
std::optional<Fq> find_k_alpha(const FqFieldPtr& f);

bool fq_is_square(const Fq& a);

}  // namespace hcns
