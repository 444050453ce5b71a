#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>

namespace hcns {

// Arbitrary-precision integers and rationals. Thin aliases over GMP's C++
// classes; everything downstream only relies on exact arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool int_divides(const Int& b, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline std::optional<Int> int_try_divexact(const Int& a, const Int& b) {
  if (b == 0 || !int_divides(b, a)) return std::nullopt;
  return int_divexact(a, b);
}

inline bool rat_is_integer(const Rat& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

inline std::string int_str(const Int& a) { return a.get_str(); }
inline std::string rat_str(const Rat& r) {
  return rat_is_integer(r) ? r.get_num().get_str() : r.get_str();
}

}  // namespace hcns
