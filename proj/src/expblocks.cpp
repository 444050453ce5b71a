#include "hcnslab/expblocks.hpp"

#include "hcnslab/lie.hpp"

namespace hcns {

namespace {

Rat lift_fp(const Fq& v) {
  if (!v.has_field()) return Rat(0);
  return Rat((unsigned long)v.coeffs()[0]);
}

}  // namespace

std::shared_ptr<const LiftedE3> make_lifted_e3(const Hcns<Fq>& h) {
  auto out = std::make_shared<LiftedE3>();
  if (h.kr->zero.field()->degree() != 1) {
    out->reason = "torsion-free lift implemented for prime base fields only";
    return out;
  }
  for (const auto& [ij, v] : h.sharp)
    if (!v.is_zero()) {
      out->reason =
          "no torsion-free lift: instance has nonzero sharp data "
          "(characteristic-3 exponentials need N = sharp = 0)";
      return out;
    }
  for (const auto& [t, v] : h.ncoef)
    if (!v.is_zero()) {
      out->reason =
          "no torsion-free lift: instance has nonzero cubic norm data";
      return out;
    }

  // symbolic coordinates for a group element over the lift
  std::vector<std::string> names = {"za0", "za1", "uq"};
  for (int i = 0; i < h.n; ++i) {
    names.push_back("w" + std::to_string(2 * i));
    names.push_back("w" + std::to_string(2 * i + 1));
  }
  auto rq = make_loc_ring<Rat>(make_vars(names));
  auto krq = make_kring<SymQ>(SymQ::constant(rq, lift_fp(h.kr->alpha)));
  Hcns<SymQ> hl = map_hcns<SymQ>(
      h, krq, [&](const Fq& v) { return SymQ::constant(rq, lift_fp(v)); });

  auto var = [&](std::size_t i) { return SymQ::variable(rq, i); };
  K<SymQ> a(krq, var(0), var(1));
  JVec<SymQ> v = hl.jzero();
  for (int i = 0; i < h.n; ++i)
    v.c[i] = K<SymQ>(krq, var(3 + 2 * i), var(4 + 2 * i));
  SymQ q = var(2);
  SymQ tr = knorm(a) + eval_T(hl, v, v).x0();
  SymQ half = SymQ::constant(rq, Rat(1, 2));
  K<SymQ> u(krq, (tr - q) * half, q);
  GElem<SymQ> g{a, v, u};
  if (!g_member(hl, g))
    throw std::logic_error("lift: symbolic element fails membership");

  AdG<SymQ> ad(hl, g);
  LieElem<SymQ> full = ad.exp_apply(lie_grade_m2(hl, SymQ::one(rq)));
  // closed-form cross-checks of every block except e3
  K<SymQ> tmt = K<SymQ>::t_minus_tbar(krq);
  AElem<SymQ> x{a, v};
  AElem<SymQ> tmtx = x.scaled(tmt);
  if (!(full.lm2 == SymQ::one(rq)))
    throw std::logic_error("lift: e0 block mismatch");
  if (!(full.am1 == tmtx)) throw std::logic_error("lift: e1 block mismatch");
  SymQ m4 = one_minus_4alpha(krq);
  std::size_t m = a_dim(hl);
  Mat<SymQ> e2p = Mat<SymQ>::identity(m, krq->zero).scaled(ad.sp * m4) +
                  V_matrix(hl, x, tmtx).scaled(half);
  Mat<SymQ> e2m = Mat<SymQ>::identity(m, krq->zero).scaled(-(ad.sp * m4)) +
                  (-V_matrix(hl, tmtx, x)).scaled(half);
  if (!(full.fp == e2p) || !(full.fm == e2m))
    throw std::logic_error("lift: e2 block mismatch");
  if (!(full.l2 == nu(hl, g)))
    throw std::logic_error("lift: e4 block differs from the quartic norm");

  // integrality of the e3 block, then cast to Z
  auto rz = make_loc_ring<Int>(rq->tab);
  std::vector<SymQ> coords = a_coords(hl, full.a1);
  for (const auto& c : coords) {
    if (!c.is_polynomial())
      throw std::logic_error("lift: e3 block has a localized denominator");
    auto z = to_int_checked(rz, c);
    if (!z) throw std::logic_error("lift: e3 block is not integral");
    out->e3_coords.push_back(z->num());
  }
  out->tab = rq->tab;
  out->ok = true;
  return out;
}

}  // namespace hcns
