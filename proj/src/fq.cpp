#include "hcnslab/fq.hpp"

#include <algorithm>

namespace hcns {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using UPoly = std::vector<std::uint64_t>;  // dense, c[i] coeff of th^i

UPoly up_trim(UPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

UPoly up_mulmod(const UPoly& a, const UPoly& b, const UPoly& f,
                std::uint64_t p) {
  // f monic of degree d (coefficients c0..cd with cd==1)
  std::size_t d = f.size() - 1;
  UPoly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t i = r.size(); i-- > d;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t sub = (c * f[j]) % p;
      r[i - d + j] = (r[i - d + j] + p - sub) % p;
    }
  }
  r.resize(d);
  return r;
}

UPoly up_powmod_xq(std::uint64_t e_p, unsigned e_exp, const UPoly& f,
                   std::uint64_t p) {
  // computes x^(e_p^e_exp) mod f by repeated powering
  std::size_t d = f.size() - 1;
  UPoly x(d, 0);
  if (d == 1) {
    // x == -f0 mod f
    x[0] = (p - f[0] % p) % p;
  } else {
    x[1] = 1;
  }
  UPoly cur = x;
  for (unsigned k = 0; k < e_exp; ++k) {
    // cur <- cur^p via square and multiply
    UPoly r(d, 0);
    r[0] = 1;
    UPoly base = cur;
    std::uint64_t e = e_p;
    while (e) {
      if (e & 1) r = up_mulmod(r, base, f, p);
      base = up_mulmod(base, base, f, p);
      e >>= 1;
    }
    cur = r;
  }
  return cur;
}

UPoly up_gcd(UPoly a, UPoly b, std::uint64_t p) {
  a = up_trim(std::move(a));
  b = up_trim(std::move(b));
  auto invp = [&](std::uint64_t v) {
    std::uint64_t r = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    std::uint64_t lead_inv = invp(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = (a.back() * lead_inv) % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = (c * b[i]) % p;
        a[i + shift] = (a[i + shift] + p - sub) % p;
      }
      a = up_trim(std::move(a));
    }
    std::swap(a, b);
  }
  return a;
}

bool up_irreducible(const UPoly& f, std::uint64_t p) {
  std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  // x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) == 1 for primes l | d
  UPoly xq = up_powmod_xq(p, (unsigned)d, f, p);
  UPoly x(d, 0);
  x[1] = 1;
  UPoly diff(std::max(xq.size(), x.size()), 0);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    std::uint64_t a = i < xq.size() ? xq[i] : 0;
    std::uint64_t b = i < x.size() ? x[i] : 0;
    diff[i] = (a + p - b) % p;
  }
  if (!up_trim(diff).empty()) return false;
  for (std::uint64_t l = 2; l <= d; ++l) {
    if (d % l != 0 || !is_prime_u64(l)) continue;
    UPoly xe = up_powmod_xq(p, (unsigned)(d / l), f, p);
    UPoly g(std::max(xe.size(), x.size()), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t a = i < xe.size() ? xe[i] : 0;
      std::uint64_t b = i < x.size() ? x[i] : 0;
      g[i] = (a + p - b) % p;
    }
    UPoly gc = up_gcd(g, f, p);
    if (gc.size() != 1) return false;
  }
  return true;
}

}  // namespace

FqField::FqField(std::uint64_t p, std::uint32_t d,
                 std::vector<std::uint64_t> mod)
    : p_(p), d_(d), mod_(std::move(mod)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (q_ > (std::uint64_t)1 << 40) throw std::overflow_error("field too big");
    q_ *= p_;
  }
}

FqFieldPtr FqField::make_with_modulus(std::uint64_t p,
                                      std::vector<std::uint64_t> modulus) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
  std::uint32_t d = (std::uint32_t)modulus.size();
  if (d == 0) throw std::invalid_argument("empty modulus");
  UPoly f(modulus.begin(), modulus.end());
  for (auto& c : f) c %= p;
  f.push_back(1);  // monic top coefficient
  if (!up_irreducible(f, p))
    throw std::invalid_argument("modulus is not irreducible");
  std::vector<std::uint64_t> low(f.begin(), f.end() - 1);
  return FqFieldPtr(new FqField(p, d, std::move(low)));
}

FqFieldPtr FqField::make(std::uint64_t p, std::uint32_t d) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
  if (d == 0) throw std::invalid_argument("degree must be positive");
  if (d == 1)
    return FqFieldPtr(new FqField(p, 1, {0}));
  // deterministic search: smallest modulus in base-p counting order
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    UPoly f(d + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[d] = 1;
    if (up_irreducible(f, p)) {
      std::vector<std::uint64_t> low(f.begin(), f.end() - 1);
      return FqFieldPtr(new FqField(p, d, std::move(low)));
    }
  }
  throw std::logic_error("no irreducible modulus found");
}

std::uint64_t FqField::inv_mod_p(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("division by zero mod p");
  std::uint64_t r = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) r = (r * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  if (!f_ && !o.f_) return Fq(pend_ * o.pend_);
  const FqFieldPtr& fp = f_ ? f_ : o.f_;
  Fq a = materialized(fp), b = o.materialized(fp);
  std::size_t d = fp->degree();
  UPoly f(fp->modulus_low().begin(), fp->modulus_low().end());
  f.push_back(1);
  UPoly r = up_mulmod(UPoly(a.coeffs().begin(), a.coeffs().end()),
                      UPoly(b.coeffs().begin(), b.coeffs().end()), f, fp->p());
  r.resize(d, 0);
  return Fq(fp, std::vector<std::uint64_t>(r.begin(), r.end()));
}

std::optional<Fq> Fq::inverse() const {
  if (!f_ || is_zero()) return std::nullopt;
  // a^(q-2)
  Fq r = Fq::one(f_);
  Fq base = *this;
  std::uint64_t e = f_->order() - 2;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool fq_is_square(const Fq& a) {
  if (a.is_zero()) return true;
  const auto& f = a.field();
  Fq r = Fq::one(f);
  Fq base = a;
  std::uint64_t e = (f->order() - 1) / 2;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r == Fq::one(f);
}

std::optional<Fq> find_k_alpha(const FqFieldPtr& f) {
  if (f->p() == 2) return std::nullopt;
  Fq four = Fq::from_int(f, 4);
  for (std::uint64_t i = 0; i < f->order(); ++i) {
    Fq alpha = Fq::from_index(f, i);
    Fq disc = Fq::one(f) - four * alpha;
    if (!disc.is_zero() && !fq_is_square(disc)) return alpha;
  }
  return std::nullopt;
}

}  // namespace hcns
