#pragma once
#include "hcnslab/hcns.hpp"

namespace hcns {

// Rank-3 structure on the basis (v, v^sharp, v x v^sharp) determined by the
// three constants T(v,v) = x, T(v^sharp,v^sharp) = y, N(v) = nk. Valid over
// any base ring, for any parameter values; the universal one-generator model
// is the instantiation with x, y, alpha, N1, N2 as polynomial indeterminates.
template <class R>
Hcns<R> build_one_generator_model(const KRingPtr<R>& kr, const R& x,
                                  const R& y, const K<R>& nk) {
  using KK = K<R>;
  KK kx = KK::from_r(kr, x);
  KK ky = KK::from_r(kr, y);
  KK nb = involute(nk);
  KK nnb = nk * nb;
  auto times3 = [](const KK& k) { return k + k + k; };
  auto times2 = [](const KK& k) { return k + k; };

  Hcns<R> h;
  h.kr = kr;
  h.n = 3;
  h.gram = {{kx, times3(nk), times2(ky)},
            {times3(nb), ky, times2(nb * kx)},
            {times2(ky), times2(nk * kx), kx * ky + times3(nnb)}};

  auto jv = [&](KK a, KK b, KK c) {
    JVec<R> j = h.jzero();
    j.c[0] = std::move(a);
    j.c[1] = std::move(b);
    j.c[2] = std::move(c);
    return j;
  };
  KK z = KK::zero(kr), o = KK::one(kr);
  h.sharp.emplace(std::pair{0, 0}, jv(z, o, z));          // v^sharp
  h.sharp.emplace(std::pair{1, 1}, jv(nk, z, z));         // N(v) v
  h.sharp.emplace(std::pair{2, 2}, jv(nb * kx, ky, -nb));
  h.sharp.emplace(std::pair{0, 1}, jv(z, z, o));          // v x v^sharp
  h.sharp.emplace(std::pair{0, 2}, jv(nb, kx, z));
  h.sharp.emplace(std::pair{1, 2}, jv(ky, nk, z));

  h.ncoef.emplace(std::array{0, 0, 0}, nk);
  h.ncoef.emplace(std::array{1, 1, 1}, nb * nb);
  h.ncoef.emplace(std::array{2, 2, 2}, nk * (kx * ky - nnb));
  h.ncoef.emplace(std::array{0, 0, 1}, ky);
  h.ncoef.emplace(std::array{0, 1, 1}, nb * kx);
  h.ncoef.emplace(std::array{0, 0, 2}, times2(nk * kx));
  h.ncoef.emplace(std::array{0, 2, 2}, nk * (kx * kx + ky));
  h.ncoef.emplace(std::array{1, 1, 2}, times2(nb * ky));
  h.ncoef.emplace(std::array{1, 2, 2}, nnb * kx + ky * ky);
  h.ncoef.emplace(std::array{0, 1, 2}, times3(nnb) + kx * ky);
  h.validate();
  return h;
}

// The universal one-generator model over Z[x,y,alpha,N1,N2, (1-4alpha)^-1].
struct UniversalModel {
  LocRingPtr<Int> ring;
  KRingPtr<SymZ> kr;
  Hcns<SymZ> h;
  // variable indices in the table
  enum : std::size_t { VX = 0, VY = 1, VALPHA = 2, VN1 = 3, VN2 = 4 };
};

UniversalModel build_universal();

// check_axioms on U at the generic point (reports the four defining
// identities and the two derived ones).
CheckReport verify_universal_axioms(int jobs = 1);

// Specialization of U into a target structure along v -> w.
template <class R>
struct SpecializationHom {
  JVec<R> img_v, img_vs, img_vvs;  // images of the three basis elements
  R x_val, y_val, alpha_val;
  K<R> n_val;
  std::string obstruction;  // nonempty when the specialization fails
  bool ok() const { return obstruction.empty(); }
};

// Maps v -> w, v^sharp -> w^sharp, v x v^sharp -> w x w^sharp, with the
// scalar specialization x -> T(w,w), y -> T(w#,w#), N1 t + N2 (1-t) -> N(w).
// Over a non-domain base the precondition N(w^sharp) = conj(N(w))^2 is
// checked eagerly; `domain` asserts the caller's knowledge that R has no
// zero divisors (then the check is implied and skipped).
template <class R>
SpecializationHom<R> specialize(const Hcns<R>& target, const JVec<R>& w,
                                bool domain) {
  SpecializationHom<R> s;
  s.img_v = w;
  s.img_vs = eval_sharp(target, w);
  s.img_vvs = cross(target, w, s.img_vs);
  K<R> tww = eval_T(target, w, w);
  K<R> tss = eval_T(target, s.img_vs, s.img_vs);
  if (!tww.is_real() || !tss.is_real()) {
    s.obstruction = "T(w,w) or T(w#,w#) has a nonzero t-coordinate";
    return s;
  }
  s.x_val = tww.x0();
  s.y_val = tss.x0();
  s.alpha_val = target.kr->alpha;
  s.n_val = eval_N(target, w);
  if (!domain) {
    K<R> lhs = eval_N(target, s.img_vs);
    K<R> rhs = involute(s.n_val) * involute(s.n_val);
    if (!(lhs == rhs)) {
      s.obstruction = "N(w^sharp) != conj(N(w))^2 over a non-domain base";
      return s;
    }
  }
  return s;
}

// Applies the specialization to a scalar of U's base ring.
template <class R>
R specialize_scalar(const UniversalModel& u, const SpecializationHom<R>& s,
                    const SymZ& a);

// Checks that the basis images preserve N, sharp/cross and T (evaluated on
// all basis pairs/triples); returns the list of failed identities.
template <class R>
std::vector<std::string> specialization_preserves(const UniversalModel& u,
                                                  const Hcns<R>& target,
                                                  const SpecializationHom<R>& s);

// The seven verified identities for the one-invertibility element, checked
// exactly in U's base ring extended by z1, z2, z3 and localized at nu.
CheckReport verify_oneinv_equations(int jobs = 1);

// nu computed from the degree-4 component of the exponential action versus
// the closed formula, symbolically on U extended by z1,z2,z3. Returns the
// report plus the recorded global sign of the action route.
struct NuActionResult {
  CheckReport report;
  int sign = 0;  // action-route coefficient = sign * closed-form nu
};
NuActionResult verify_nu_via_action_symbolic();

}  // namespace hcns
