#pragma once
#include <memory>

#include "hcnslab/hcns.hpp"

namespace hcns {

// Integral polynomial formulas for the one exponential block that is not
// characteristic-free in closed form: e3 applied to (t-tbar)_{-2}. They are
// produced once per instance by running the exponential series over a
// torsion-free lift of the structure with symbolic element coordinates
// (za0, za1, uq, w0, w1, ...), asserting integrality, and casting to Z.
// Specializing the formulas mod p then gives the block over any F_p fiber
// of the lift, which is how characteristic 3 is supported.
struct LiftedE3 {
  bool ok = false;
  std::string reason;
  VarTablePtr tab;
  std::vector<PolyZ> e3_coords;  // A-coordinates of e3((t-tbar)_{-2})
};

std::shared_ptr<const LiftedE3> make_lifted_e3(const Hcns<Fq>& h);

template <class R>
R eval_poly_in(const PolyZ& f, const std::vector<R>& vals, const R& zero) {
  return f.template eval<R>(
      std::span<const R>(vals.data(), vals.size()),
      [&](const Int& c) { return RingTraits<R>::from_bigint(zero, c); }, zero);
}

}  // namespace hcns
