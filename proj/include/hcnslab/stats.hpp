#pragma once
#include <atomic>
#include <cstdint>

namespace hcns {

// Global polynomial-arithmetic counters, used by the CLI --profile flag.
struct PolyStats {
  std::atomic<std::uint64_t> term_mults{0};
  std::atomic<std::uint64_t> poly_mults{0};
  std::atomic<std::uint64_t> poly_adds{0};
  std::atomic<std::uint64_t> max_terms{0};

  void note_terms(std::uint64_t n) {
    std::uint64_t cur = max_terms.load(std::memory_order_relaxed);
    while (n > cur &&
           !max_terms.compare_exchange_weak(cur, n, std::memory_order_relaxed))
      ;
  }
  void reset() {
    term_mults = 0;
    poly_mults = 0;
    poly_adds = 0;
    max_terms = 0;
  }
};

inline PolyStats& poly_stats() {
  static PolyStats s;
  return s;
}

}  // namespace hcns
