#pragma once
#include <string>
#include <vector>

namespace hcns {

// One verified identity: name, verdict, and diagnostics. Failures are data,
// not errors; a witness pins down the first offending monomial.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;   // set on failure
  std::string scaling;   // documented scaling constant, when applicable
  std::uint64_t lhs_terms = 0;
  std::uint64_t rhs_terms = 0;
  double ms = 0.0;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

}  // namespace hcns
