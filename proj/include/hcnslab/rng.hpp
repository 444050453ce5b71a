#pragma once
#include <cstdint>
#include <random>

namespace hcns {

// Deterministic RNG for the randomized suites. A fixed seed must reproduce
// identical runs byte-for-byte, so all sampling goes through this engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= lim);
    return v % n;
  }
  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + (long)below((std::uint64_t)(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hcns
