#pragma once
#include <algorithm>
#include <cstring>
#include <optional>
#include <span>
#include <sstream>

#include "hcnslab/bigint.hpp"
#include "hcnslab/stats.hpp"
#include "hcnslab/varset.hpp"

namespace hcns {

// Per-coefficient-type hooks used by the polynomial engine.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Int> {
  static bool is_zero(const Int& a) { return a == 0; }
  static bool is_unit(const Int& a) { return a == 1 || a == -1; }
  static std::optional<Int> try_div(const Int& a, const Int& b) {
    return int_try_divexact(a, b);
  }
  static std::string str(const Int& a) { return int_str(a); }
};

template <>
struct CoeffOps<Rat> {
  static bool is_zero(const Rat& a) { return a == 0; }
  static bool is_unit(const Rat& a) { return a != 0; }
  static std::optional<Rat> try_div(const Rat& a, const Rat& b) {
    if (b == 0) return std::nullopt;
    return Rat(a / b);
  }
  static std::string str(const Rat& a) { return rat_str(a); }
};

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// graded-lex descending order (variable 0 most significant) with no zero
// coefficients stored, so equal polynomials have identical representations.
// Exponent vectors are padded to 8-byte words; term degrees are cached.
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarTablePtr tab) : tab_(std::move(tab)) {}

  static Poly zero(VarTablePtr tab) { return Poly(std::move(tab)); }
  static Poly constant(VarTablePtr tab, C c) {
    Poly p(std::move(tab));
    if (!CoeffOps<C>::is_zero(c)) {
      p.ex_.assign(p.words(), 0);
      p.cf_.push_back(std::move(c));
      p.dg_.push_back(0);
    }
    return p;
  }
  static Poly variable(VarTablePtr tab, std::size_t i, unsigned e = 1) {
    if (e == 0) return constant(std::move(tab), C(1));
    Poly p(std::move(tab));
    p.ex_.assign(p.words(), 0);
    p.exp_bytes(0)[i] = (std::uint8_t)e;
    p.cf_.push_back(C(1));
    p.dg_.push_back(e);
    return p;
  }
  static Poly monomial(VarTablePtr tab, std::span<const std::uint8_t> exps,
                       C c) {
    Poly p(std::move(tab));
    if (!CoeffOps<C>::is_zero(c)) {
      p.ex_.assign(p.words(), 0);
      unsigned d = 0;
      std::uint8_t* dst = p.exp_bytes(0);
      for (std::size_t v = 0; v < p.nvars(); ++v) {
        dst[v] = exps[v];
        d += exps[v];
      }
      p.cf_.push_back(std::move(c));
      p.dg_.push_back(d);
    }
    return p;
  }

  const VarTablePtr& table() const { return tab_; }
  std::size_t nvars() const { return tab_ ? tab_->size() : 0; }
  std::size_t words() const { return (nvars() + 8) / 8; }  // >= 1
  std::size_t stride() const { return words() * 8; }
  std::size_t nterms() const { return cf_.size(); }
  bool is_zero() const { return cf_.empty(); }
  bool is_constant() const { return cf_.empty() || (cf_.size() == 1 && dg_[0] == 0); }
  const C& coeff(std::size_t t) const { return cf_[t]; }
  const std::uint8_t* exps(std::size_t t) const {
    return reinterpret_cast<const std::uint8_t*>(ex_.data() + t * words());
  }
  unsigned term_degree(std::size_t t) const { return dg_[t]; }
  unsigned total_degree() const {
    unsigned d = 0;
    for (auto v : dg_) d = std::max(d, v);
    return d;
  }
  C constant_value() const {
    if (is_zero()) return C(0);
    std::size_t last = nterms() - 1;
    return dg_[last] == 0 ? cf_[last] : C(0);
  }

  bool operator==(const Poly& o) const {
    if (!same_table(o)) return false;
    return cf_ == o.cf_ && ex_ == o.ex_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.cf_) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  // k-way merge over the smaller operand: each stream big * b_j stays
  // sorted, so the product is a heap merge with coefficient work only on
  // output terms (addmul on key collisions).
  Poly operator*(const Poly& o) const {
    check_table(o);
    Poly r(tab_);
    if (is_zero() || o.is_zero()) return r;
    poly_stats().poly_mults.fetch_add(1, std::memory_order_relaxed);
    const std::size_t nw = words();
    const Poly& big = nterms() >= o.nterms() ? *this : o;
    const Poly& sml = nterms() >= o.nterms() ? o : *this;
    const std::size_t ns = sml.nterms();
    poly_stats().term_mults.fetch_add(big.nterms() * ns,
                                      std::memory_order_relaxed);

    constexpr std::uint64_t kLow = 0x7f7f7f7f7f7f7f7full;
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    std::vector<std::size_t> pos(ns, 0);
    std::vector<std::uint64_t> key(ns * nw);
    std::vector<std::uint32_t> deg(ns);
    auto load_key = [&](std::size_t s) {
      const std::uint64_t* ea = big.ex_.data() + pos[s] * nw;
      const std::uint64_t* eb = sml.ex_.data() + s * nw;
      std::uint64_t* out = key.data() + s * nw;
      for (std::size_t w = 0; w < nw; ++w) {
        std::uint64_t x = ea[w], y = eb[w];
        std::uint64_t low = (x & kLow) + (y & kLow);
        std::uint64_t sum = low ^ ((x ^ y) & kHigh);
        if (((x & y) | ((x | y) & ~sum)) & kHigh)
          throw std::overflow_error("monomial exponent overflow");
        out[w] = sum;
      }
      deg[s] = big.dg_[pos[s]] + sml.dg_[s];
    };
    auto key_less = [&](std::uint32_t x, std::uint32_t y) {
      if (deg[x] != deg[y]) return deg[x] < deg[y];
      return std::memcmp(key.data() + x * nw, key.data() + y * nw,
                         nw * 8) < 0;
    };
    std::vector<std::uint32_t> heap(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      heap[s] = (std::uint32_t)s;
      load_key(s);
    }
    std::make_heap(heap.begin(), heap.end(), key_less);
    // max-heap replace-top; cheap when the same stream keeps winning
    auto sift_down = [&]() {
      std::size_t i = 0, n = heap.size();
      std::uint32_t v = heap[0];
      while (true) {
        std::size_t l = 2 * i + 1;
        if (l >= n) break;
        std::size_t c = l + ((l + 1 < n && key_less(heap[l], heap[l + 1]))
                                 ? 1
                                 : 0);
        if (!key_less(v, heap[c])) break;
        heap[i] = heap[c];
        i = c;
      }
      heap[i] = v;
    };

    bool have_last = false;
    while (!heap.empty()) {
      std::uint32_t s = heap[0];
      const std::uint64_t* k = key.data() + s * nw;
      const C& ca = big.cf_[pos[s]];
      const C& cb = sml.cf_[s];
      if (have_last && r.dg_.back() == deg[s] &&
          std::equal(k, k + nw, r.ex_.end() - nw)) {
        if constexpr (std::is_same_v<C, Int>) {
          mpz_addmul(r.cf_.back().get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        } else {
          r.cf_.back() += ca * cb;
        }
      } else {
        if (have_last && CoeffOps<C>::is_zero(r.cf_.back())) {
          r.cf_.pop_back();
          r.dg_.pop_back();
          r.ex_.resize(r.ex_.size() - nw);
        }
        r.ex_.insert(r.ex_.end(), k, k + nw);
        r.cf_.push_back(ca * cb);
        r.dg_.push_back(deg[s]);
        have_last = true;
      }
      if (++pos[s] < big.nterms()) {
        load_key(s);
        sift_down();
      } else {
        heap[0] = heap.back();
        heap.pop_back();
        if (!heap.empty()) sift_down();
      }
    }
    if (have_last && CoeffOps<C>::is_zero(r.cf_.back())) {
      r.cf_.pop_back();
      r.dg_.pop_back();
      r.ex_.resize(r.ex_.size() - nw);
    }
    poly_stats().note_terms(r.nterms());
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const C& c) const {
    Poly r(tab_);
    if (CoeffOps<C>::is_zero(c)) return r;
    r.ex_ = ex_;
    r.dg_ = dg_;
    r.cf_.reserve(cf_.size());
    for (const auto& a : cf_) r.cf_.push_back(a * c);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(tab_, C(1));
    Poly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Exact division; nullopt when o does not divide this exactly.
  std::optional<Poly> divexact(const Poly& o) const {
    check_table(o);
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return zero(tab_);
    Poly rem = *this;
    Poly quo(tab_);
    const std::size_t nv = nvars();
    std::vector<std::uint8_t> qe(nv);
    while (!rem.is_zero()) {
      const std::uint8_t* er = rem.exps(0);
      const std::uint8_t* eo = o.exps(0);
      for (std::size_t v = 0; v < nv; ++v) {
        if (er[v] < eo[v]) return std::nullopt;
        qe[v] = (std::uint8_t)(er[v] - eo[v]);
      }
      auto qc = CoeffOps<C>::try_div(rem.cf_[0], o.cf_[0]);
      if (!qc) return std::nullopt;
      Poly t = monomial(tab_, qe, *qc);
      quo += t;
      rem -= t * o;
    }
    return quo;
  }

  // Reinterpret in an extended table (this table must be a prefix of nt).
  Poly reindexed(const VarTablePtr& nt) const {
    if (tab_->same_as(*nt)) {
      Poly r = *this;
      r.tab_ = nt;
      return r;
    }
    if (!tab_->prefix_of(*nt))
      throw std::invalid_argument("reindexed: not a table extension");
    Poly r(nt);
    const std::size_t ov = nvars();
    r.cf_ = cf_;
    r.dg_ = dg_;
    r.ex_.assign(nterms() * r.words(), 0);
    for (std::size_t t = 0; t < nterms(); ++t)
      std::memcpy(r.exp_bytes(t), exps(t), ov);
    return r;
  }

  // Substitute values[i] for variable i; coefficients mapped through `lift`.
  template <class T, class F>
  T eval(std::span<const T> values, const F& lift, const T& zero) const {
    if (values.size() != nvars())
      throw std::invalid_argument("eval: wrong number of values");
    std::vector<std::vector<T>> pows(nvars());
    T acc = zero;
    for (std::size_t t = 0; t < nterms(); ++t) {
      T term = lift(cf_[t]);
      const std::uint8_t* e = exps(t);
      for (std::size_t v = 0; v < nvars(); ++v) {
        if (e[v] == 0) continue;
        auto& pv = pows[v];
        if (pv.empty()) pv.push_back(values[v]);
        while (pv.size() < e[v]) pv.push_back(pv.back() * values[v]);
        term = term * pv[e[v] - 1];
      }
      acc = acc + term;
    }
    return acc;
  }

  // Collect the coefficient of prod_i vars[i]^want[i]; those variables are
  // stripped from the result (all other exponents kept).
  Poly coeff_of(std::span<const std::size_t> vars,
                std::span<const unsigned> want) const {
    Poly r(tab_);
    const std::size_t nv = nvars();
    std::vector<std::uint8_t> e2(nv);
    for (std::size_t t = 0; t < nterms(); ++t) {
      const std::uint8_t* e = exps(t);
      bool ok = true;
      for (std::size_t k = 0; k < vars.size(); ++k)
        if (e[vars[k]] != want[k]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::memcpy(e2.data(), e, nv);
      for (std::size_t k = 0; k < vars.size(); ++k) e2[vars[k]] = 0;
      r += monomial(tab_, e2, cf_[t]);
    }
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < nterms(); ++t) {
      std::string cs = CoeffOps<C>::str(cf_[t]);
      bool neg = !cs.empty() && cs[0] == '-';
      if (t == 0) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (neg) cs = cs.substr(1);
      std::string mon;
      const std::uint8_t* e = exps(t);
      for (std::size_t v = 0; v < nvars(); ++v) {
        if (e[v] == 0) continue;
        if (!mon.empty()) mon += "*";
        mon += tab_->name(v);
        if (e[v] > 1) mon += "^" + std::to_string((unsigned)e[v]);
      }
      if (mon.empty()) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << mon;
      }
    }
    return os.str();
  }

  // Leading monomial as a string (first term in the canonical order).
  std::string leading_monomial_str() const {
    if (is_zero()) return "0";
    Poly p(tab_);
    p.ex_.assign(ex_.begin(), ex_.begin() + words());
    p.cf_.push_back(cf_[0]);
    p.dg_.push_back(dg_[0]);
    return p.str();
  }

  bool same_table(const Poly& o) const {
    return tab_ == o.tab_ || (tab_ && o.tab_ && tab_->same_as(*o.tab_));
  }

 private:
  void check_table(const Poly& o) const {
    if (!same_table(o)) throw std::invalid_argument("polynomial ring mismatch");
  }

  static int cmp_terms(unsigned da, const std::uint8_t* ea, unsigned db,
                       const std::uint8_t* eb, std::size_t st) {
    if (da != db) return da > db ? 1 : -1;
    int c = std::memcmp(ea, eb, st);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }

  Poly merged(const Poly& o, bool subtract) const {
    check_table(o);
    poly_stats().poly_adds.fetch_add(1, std::memory_order_relaxed);
    Poly r(tab_);
    const std::size_t nw = words();
    r.ex_.reserve(ex_.size() + o.ex_.size());
    r.cf_.reserve(cf_.size() + o.cf_.size());
    r.dg_.reserve(dg_.size() + o.dg_.size());
    std::size_t i = 0, j = 0;
    while (i < nterms() || j < o.nterms()) {
      int c;
      if (i >= nterms())
        c = -1;
      else if (j >= o.nterms())
        c = 1;
      else
        c = cmp_terms(dg_[i], exps(i), o.dg_[j], o.exps(j), nw * 8);
      if (c > 0) {
        r.ex_.insert(r.ex_.end(), ex_.begin() + i * nw,
                     ex_.begin() + (i + 1) * nw);
        r.cf_.push_back(cf_[i]);
        r.dg_.push_back(dg_[i]);
        ++i;
      } else if (c < 0) {
        r.ex_.insert(r.ex_.end(), o.ex_.begin() + j * nw,
                     o.ex_.begin() + (j + 1) * nw);
        r.cf_.push_back(subtract ? C(-o.cf_[j]) : o.cf_[j]);
        r.dg_.push_back(o.dg_[j]);
        ++j;
      } else {
        C s = subtract ? C(cf_[i] - o.cf_[j]) : C(cf_[i] + o.cf_[j]);
        if (!CoeffOps<C>::is_zero(s)) {
          r.ex_.insert(r.ex_.end(), ex_.begin() + i * nw,
                       ex_.begin() + (i + 1) * nw);
          r.cf_.push_back(std::move(s));
          r.dg_.push_back(dg_[i]);
        }
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::uint8_t* exp_bytes(std::size_t t) {
    return reinterpret_cast<std::uint8_t*>(ex_.data() + t * words());
  }

  VarTablePtr tab_;
  std::vector<std::uint64_t> ex_;  // nterms * words(), zero padded bytes
  std::vector<C> cf_;
  std::vector<std::uint32_t> dg_;
};

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;

}  // namespace hcns
