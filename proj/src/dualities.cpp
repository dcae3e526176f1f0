#include "phopf/dualities.hpp"

#include "phopf/errors.hpp"

namespace phopf {

namespace {

Vec scalar_vec(const Scalar& s) { return Vec{s}; }

void require_pairing(const Mat& form, const HopfPackage& h, const HopfPackage& k, const char* what) {
  Report r = check_pairing(form, h, k, PairingKind::bialgebra, false);
  if (!r.passed()) throw PairingAxiomFailure(std::string(what) + ": Hopf pairing fails " + r.first_failure()->id);
}

void require_nondegenerate(const Mat& form, const char* what) {
  if (form.rows() != form.cols() || !is_nondegenerate(form))
    throw DegeneratePairing(std::string(what) + ": pairing is degenerate");
}

// pairing(a, c) on arbitrary vectors.
Scalar pair_ac(const Mat& p, const SparseVec& a, const SparseVec& c) {
  Scalar s;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : c) s += x * y * p(i, j);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- actions and coactions

PartialAction action_from_coaction(const PartialCoaction& pc, const HopfPackage& h, const Mat& form) {
  const std::size_t na = pc.a.dim(), nk = pc.k.dim(), nh = h.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  require_pairing(form, h, pc.k, "action from coaction");
  Report chk = check_partial_coaction(pc);
  if (!chk.passed()) throw CoactionAxiomFailure("action from coaction: coaction fails " + chk.first_failure()->id);
  if (!chk.flag("symmetric")) throw NotSymmetric("action from coaction: the coaction is not symmetric");
  Mat act(na, nh * na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t i = 0; i < na * nk; ++i) {
      const Scalar& r = pc.rho(i, a);
      if (r.is_zero()) continue;
      for (std::size_t hi = 0; hi < nh; ++hi) act(i / nk, hi * na + a) += r * form(hi, i % nk);
    }
  return PartialAction(h, pc.a, std::move(act));
}

PartialCoaction coaction_from_action(const PartialAction& pa, const HopfPackage& k, const Mat& form) {
  const std::size_t na = pa.a.dim(), nh = pa.h.dim(), nk = k.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  require_nondegenerate(form, "coaction from action");
  require_pairing(form, pa.h, k, "coaction from action");
  Report chk = check_partial_action(pa);
  if (!chk.passed()) throw ActionAxiomFailure("coaction from action: action fails " + chk.first_failure()->id);
  if (!chk.flag("symmetric")) throw NotSymmetric("coaction from action: the action is not symmetric");
  Mat inv = *inverse(form);
  Mat rho(na * nk, na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      for (std::size_t xi = 0; xi < nk; ++xi) {
        Scalar s;
        for (std::size_t hi = 0; hi < nh; ++hi) s += inv(xi, hi) * pa.act(b, hi * na + a);
        rho(b * nk + xi, a) = s;
      }
  PartialCoaction pc(k, pa.a, std::move(rho));
  if (!(action_from_coaction(pc, pa.h, form).act == pa.act))
    throw NoSolution("coaction from action: the action is not of coaction type");
  return pc;
}

SkewPairing canonical_skew_pairing(const PartialCoaction& pc, const PartialAction& pa, const Mat& form) {
  const HopfPackage& H = pa.h;
  const HopfPackage& K = pc.k;
  const AlgebraSC& A = pa.a;
  if (!(pc.a == A)) throw DimensionMismatch("skew pairing: the action and the coaction live on different algebras");
  const std::size_t na = A.dim(), nh = H.dim(), nk = K.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  if (!H.coalgebra.is_cocommutative()) throw PreconditionFailure("H is cocommutative");
  if (!K.algebra.is_commutative()) throw PreconditionFailure("K is commutative");
  if (!A.is_commutative()) throw PreconditionFailure("base algebra is commutative");
  require_pairing(form, H, K, "skew pairing");
  for (std::size_t hi = 0; hi < nh; ++hi)
    for (std::size_t a = 0; a < na; ++a) {
      Vec r = zeros(na);
      for (std::size_t i = 0; i < na * nk; ++i)
        if (!pc.rho(i, a).is_zero()) r[i / nk] += pc.rho(i, a) * form(hi, i % nk);
      if (r != dense(pa.basis_action(hi, a), na))
        throw CompatibilityFailure("skew pairing: h·a ≠ a⁰⟨h,a¹⟩ at (" + H.names()[hi] + ", " + A.name(a) + ")");
    }

  HopfAlgebroid lam = partial_split_hopf_algebroid(pc);
  HopfAlgebroid l = smash_hopf_algebroid(pa);
  ReducedTensor rt = reduced_tensor(pc);
  SmashProduct sp = smash_product(pa);
  AlgebraSC AK = tensor_algebra(A, K.algebra);

  std::vector<SparseVec> h_one(nh);  // h·1_A
  for (std::size_t hi = 0; hi < nh; ++hi)
    for (const auto& [a, c] : sparse(A.unit())) sp_axpy(h_one[hi], c, pa.basis_action(hi, a));
  // G(a⊗ξ, b⊗h) = ab(h₁·1)⟨h₂,ξ⟩
  auto G = [&](std::size_t a, std::size_t xi, std::size_t b, std::size_t h) {
    SparseVec r;
    SparseVec ab = A.product(a, b);
    for (const auto& [p, c] : H.coalgebra.coproduct(h)) {
      Scalar f = c * form(p % nh, xi);
      if (!f.is_zero()) sp_axpy(r, f, A.multiply(ab, h_one[p / nh]));
    }
    return r;
  };
  auto G_vec = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec r;
    for (const auto& [i, c] : x)
      for (const auto& [j, d] : y) sp_axpy(r, c * d, G(i / nk, i % nk, j / nh, j % nh));
    return r;
  };
  SparseVec one = sparse(pc.one());
  for (std::size_t i = 0; i < na * nk; ++i) {
    SparseVec pr = AK.multiply(SparseVec{{i, Scalar(1)}}, one);
    for (std::size_t j = 0; j < na * nh; ++j) {
      SparseVec y{{j, Scalar(1)}};
      SparseVec hash = sparse(sp.embed(smash_element(pa, sp, unit_vec(na, j / nh), unit_vec(nh, j % nh))));
      SparseVec g = G_vec(SparseVec{{i, Scalar(1)}}, y);
      if (G_vec(pr, y) != g)
        throw WellDefinednessFailure("skew pairing: the form does not absorb ρ(1) at " + AK.name(i));
      if (G_vec(SparseVec{{i, Scalar(1)}}, hash) != g)
        throw WellDefinednessFailure("skew pairing: the form does not respect a#h at " + A.name(j / nh) + "#" +
                                     H.names()[j % nh]);
    }
  }
  const std::size_t nx = rt.dim(), nl = sp.dim();
  Mat f(na, nx * nl);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < nl; ++y)
      for (const auto& [k, v] : G_vec(from_row(rt.carrier.rows()[x]), from_row(sp.carrier.rows()[y])))
        f(k, x * nl + y) = v;
  return SkewPairing{std::move(lam), std::move(l), std::move(f)};
}

// ---------------------------------------------------------------- module coalgebras and module algebras

namespace {

Report module_transfer_report(const PartialModuleCoalgebra& pm, const RightPartialAction& ra, const Mat& p) {
  const std::size_t na = ra.a.dim(), nh = pm.h.dim(), nc = pm.c.dim();
  Report rep("module coalgebra vs module algebra");
  rep.append(check_pairing(p, ra.a, pm.c, true), "pairing:");
  rep.add(check_identity("(a·h,c)=(a,h·c)", "the actions are adjoint under (,)",
                         {basis_axis(na, ra.a.names()), basis_axis(nh, pm.h.names()), basis_axis(nc, pm.c.names())},
                         [&](const Instance& t) {
                           SparseVec ah = sparse(ra.act.column(t[0] * nh + t[1]));
                           return Evaluation{scalar_vec(pair_ac(p, ah, SparseVec{{t[2], Scalar(1)}})),
                                             scalar_vec(pair_ac(p, SparseVec{{t[0], Scalar(1)}},
                                                                pm.basis_action(t[1], t[2])))};
                         }));
  Report lc = check_partial_module_coalgebra(pm);
  Report rc = check_right_partial_action(ra);
  rep.add_fact("PLHMC ⇔ right PLA", "C is a partial module coalgebra iff A is a right partial module algebra",
               lc.passed() == rc.passed());
  rep.append(lc, "C:");
  rep.append(rc, "A:");
  rep.set_flag("module coalgebra", lc.passed());
  rep.set_flag("module algebra", rc.passed());
  rep.set_flag("symmetric", lc.flag("symmetric") && rc.flag("symmetric"));
  return rep;
}

// The matrix of c ↦ h·c.
Mat coalgebra_side(const Mat& act, std::size_t h, std::size_t nc) {
  Mat m(nc, nc);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t r = 0; r < nc; ++r) m(r, c) = act(r, h * nc + c);
  return m;
}

}  // namespace

ModuleTransfer module_coalgebra_vs_module_algebra(const PartialModuleCoalgebra& pm, const AlgebraSC& a,
                                                  const Mat& pairing) {
  const std::size_t na = a.dim(), nh = pm.h.dim(), nc = pm.c.dim();
  if (pairing.rows() != na || pairing.cols() != nc) throw DimensionMismatch("pairing must be dim A × dim C");
  require_nondegenerate(pairing, "module coalgebra vs module algebra");
  Mat inv = *inverse(pairing);
  Mat act(na, na * nh);
  for (std::size_t h = 0; h < nh; ++h) {
    Mat r = (pairing * coalgebra_side(pm.act, h, nc) * inv).transpose();
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < na; ++y) act(y, x * nh + h) = r(y, x);
  }
  RightPartialAction ra{pm.h, a, std::move(act)};
  Report rep = module_transfer_report(pm, ra, pairing);
  return ModuleTransfer{pm, std::move(ra), std::move(rep)};
}

ModuleTransfer module_coalgebra_vs_module_algebra(const RightPartialAction& ra, const CoalgebraSC& c,
                                                  const Mat& pairing) {
  const std::size_t na = ra.a.dim(), nh = ra.h.dim(), nc = c.dim();
  if (pairing.rows() != na || pairing.cols() != nc) throw DimensionMismatch("pairing must be dim A × dim C");
  if (ra.act.rows() != na || ra.act.cols() != na * nh)
    throw DimensionMismatch("right partial action matrix must be dim A × (dim A · dim H)");
  require_nondegenerate(pairing, "module coalgebra vs module algebra");
  Mat inv = *inverse(pairing);
  Mat act(nc, nh * nc);
  for (std::size_t h = 0; h < nh; ++h) {
    Mat r(na, na);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < na; ++y) r(y, x) = ra.act(y, x * nh + h);
    Mat m = inv * r.transpose() * pairing;
    for (std::size_t x = 0; x < nc; ++x)
      for (std::size_t y = 0; y < nc; ++y) act(y, h * nc + x) = m(y, x);
  }
  PartialModuleCoalgebra pm(ra.h, c, std::move(act));
  Report rep = module_transfer_report(pm, ra, pairing);
  return ModuleTransfer{std::move(pm), ra, std::move(rep)};
}

// ---------------------------------------------------------------- comodule coalgebras

Report comodule_coalgebra_vs_comodule_algebra(const PartialComoduleCoalgebra& pcc, const PartialCoaction& pc,
                                              const Mat& pairing) {
  const std::size_t na = pc.a.dim(), nc = pcc.c.dim(), nk = pc.k.dim();
  if (pcc.k.dim() != nk) throw DimensionMismatch("comodule coalgebra and comodule algebra over different Hopf algebras");
  if (pairing.rows() != na || pairing.cols() != nc) throw DimensionMismatch("pairing must be dim A × dim C");
  require_nondegenerate(pairing, "comodule coalgebra vs comodule algebra");
  Report rep("comodule coalgebra vs comodule algebra");
  rep.append(check_pairing(pairing, pc.a, pcc.c, true), "pairing:");
  rep.add(check_identity("(a⁰,c)a¹=c⁻¹(a,c⁰)", "the coactions are adjoint under (,)",
                         {basis_axis(na, pc.a.names()), basis_axis(nc, pcc.c.names())}, [&](const Instance& t) {
                           Vec l = zeros(nk), r = zeros(nk);
                           for (std::size_t i = 0; i < na * nk; ++i)
                             if (!pc.rho(i, t[0]).is_zero()) l[i % nk] += pc.rho(i, t[0]) * pairing(i / nk, t[1]);
                           for (std::size_t i = 0; i < nk * nc; ++i)
                             if (!pcc.lam(i, t[1]).is_zero()) r[i / nc] += pcc.lam(i, t[1]) * pairing(t[0], i % nc);
                           return Evaluation{l, r};
                         }));
  Report lc = check_partial_comodule_coalgebra(pcc);
  Report ra = check_partial_coaction(pc);
  rep.add_fact("PRHCA ⇔ PLHCC", "A is a partial comodule algebra iff C is a partial comodule coalgebra",
               lc.passed() == ra.passed());
  rep.append(ra, "A:");
  rep.append(lc, "C:");
  rep.set_flag("global", lc.flag("global") && ra.flag("global"));
  return rep;
}

RightPartialModuleCoalgebra module_coalgebra_from_comodule_coalgebra(const PartialComoduleCoalgebra& pcc,
                                                                     const HopfPackage& h, const Mat& form) {
  const std::size_t nc = pcc.c.dim(), nk = pcc.k.dim(), nh = h.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  require_pairing(form, h, pcc.k, "module coalgebra from comodule coalgebra");
  Report chk = check_partial_comodule_coalgebra(pcc);
  if (!chk.passed()) throw ComoduleCoalgebraFailure("module coalgebra: coaction fails " + chk.first_failure()->id);
  Mat act(nc, nc * nh);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < nk * nc; ++i) {
      const Scalar& v = pcc.lam(i, c);
      if (v.is_zero()) continue;
      for (std::size_t hi = 0; hi < nh; ++hi) act(i % nc, c * nh + hi) += v * form(hi, i / nc);
    }
  return RightPartialModuleCoalgebra{h, pcc.c, std::move(act)};
}

PartialComoduleCoalgebra comodule_coalgebra_from_module_coalgebra(const RightPartialModuleCoalgebra& r,
                                                                  const HopfPackage& k, const Mat& form) {
  const std::size_t nc = r.c.dim(), nh = r.h.dim(), nk = k.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  require_nondegenerate(form, "comodule coalgebra from module coalgebra");
  require_pairing(form, r.h, k, "comodule coalgebra from module coalgebra");
  Report chk = check_right_partial_module_coalgebra(r);
  if (!chk.passed()) throw ActionAxiomFailure("comodule coalgebra: action fails " + chk.first_failure()->id);
  Mat inv = *inverse(form);
  Mat lam(nk * nc, nc);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t d = 0; d < nc; ++d)
      for (std::size_t xi = 0; xi < nk; ++xi) {
        Scalar s;
        for (std::size_t hi = 0; hi < nh; ++hi) s += inv(xi, hi) * r.act(d, c * nh + hi);
        lam(xi * nc + d, c) = s;
      }
  PartialComoduleCoalgebra pcc(k, r.c, std::move(lam));
  if (!(module_coalgebra_from_comodule_coalgebra(pcc, r.h, form).act == r.act))
    throw NoSolution("comodule coalgebra: the action is not of coaction type");
  return pcc;
}

Report module_coalgebra_from_K_comodule_algebra(const HopfPackage& k, const AlgebraSC& a, const Mat& lambda,
                                                const Mat& form, const Mat& pairing,
                                                const PartialModuleCoalgebra& pm) {
  const HopfPackage& H = pm.h;
  const std::size_t na = a.dim(), nk = k.dim(), nh = H.dim(), nc = pm.c.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  if (pairing.rows() != na || pairing.cols() != nc) throw DimensionMismatch("pairing must be dim A × dim C");
  if (lambda.rows() != nk * na || lambda.cols() != na) throw DimensionMismatch("left coaction must be (dim K · dim A) × dim A");
  require_nondegenerate(pairing, "module coalgebra from comodule algebra");
  require_pairing(form, H, k, "module coalgebra from comodule algebra");
  Report ca = check_partial_coaction(from_left_coaction(k, a, lambda));
  if (!ca.passed()) throw CoactionAxiomFailure("module coalgebra: coaction fails " + ca.first_failure()->id);
  if (!ca.flag("symmetric")) throw NotSymmetric("module coalgebra: the left coaction is not symmetric");
  Report rep("module coalgebra from comodule algebra");
  rep.append(check_pairing(pairing, a, pm.c, true), "pairing:");
  rep.add(check_identity("(a,h·c)=⟨h,a⁻¹⟩(a⁰,c)", "the action is dual to the coaction",
                         {basis_axis(na, a.names()), basis_axis(nh, H.names()), basis_axis(nc, pm.c.names())},
                         [&](const Instance& t) {
                           Scalar l = pair_ac(pairing, SparseVec{{t[0], Scalar(1)}}, pm.basis_action(t[1], t[2]));
                           Scalar r;
                           for (std::size_t i = 0; i < nk * na; ++i)
                             if (!lambda(i, t[0]).is_zero())
                               r += lambda(i, t[0]) * form(t[1], i / na) * pairing(i % na, t[2]);
                           return Evaluation{scalar_vec(l), scalar_vec(r)};
                         }));
  Report lc = check_partial_module_coalgebra(pm);
  rep.append(lc, "C:");
  rep.set_flag("symmetric", lc.flag("symmetric"));
  rep.set_flag("global", lc.flag("global") && ca.flag("global"));
  return rep;
}

// ---------------------------------------------------------------- smash / cosmash

SmashCosmashPairing smash_cosmash_pairing(const PartialAction& pa, const PartialComoduleCoalgebra& pcc,
                                          const Mat& form, const Mat& pairing) {
  const HopfPackage& H = pa.h;
  const HopfPackage& K = pcc.k;
  const AlgebraSC& A = pa.a;
  const CoalgebraSC& C = pcc.c;
  const std::size_t na = A.dim(), nh = H.dim(), nk = K.dim(), nc = C.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("pairing form must be dim H × dim K");
  if (pairing.rows() != na || pairing.cols() != nc) throw DimensionMismatch("pairing must be dim A × dim C");
  require_pairing(form, H, K, "smash/cosmash pairing");
  std::vector<SparseVec> lam = sparse_columns(pcc.lam);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t c = 0; c < nc; ++c) {
        Scalar l = pair_ac(pairing, pa.basis_action(h, a), SparseVec{{c, Scalar(1)}});
        Scalar r;
        for (const auto& [i, v] : lam[c]) r += v * form(h, i / nc) * pairing(a, i % nc);
        if (l != r)
          throw CompatibilityFailure("smash/cosmash pairing: (h·a,c) ≠ ⟨h,c⁻¹⟩(a,c⁰) at (" + H.names()[h] + ", " +
                                     A.name(a) + ", " + C.name(c) + ")");
      }
  SmashCosmashPairing out;
  out.smash = smash_product(pa);
  out.cosmash = cosmash(pcc);
  const SmashProduct& sp = out.smash;
  const CosmashCoproduct& cs = out.cosmash;

  std::vector<SparseVec> h_one(nh);
  for (std::size_t h = 0; h < nh; ++h)
    for (const auto& [a, c] : sparse(A.unit())) sp_axpy(h_one[h], c, pa.basis_action(h, a));
  // F(b⊗h, x⊗ξ) = (b(h₁·1), x)⟨h₂, ξ⟩
  auto F = [&](std::size_t b, std::size_t h, std::size_t x, std::size_t xi) {
    Scalar s;
    for (const auto& [p, c] : H.coalgebra.coproduct(h)) {
      Scalar f = c * form(p % nh, xi);
      if (!f.is_zero()) s += f * pair_ac(pairing, A.multiply(SparseVec{{b, Scalar(1)}}, h_one[p / nh]), {{x, Scalar(1)}});
    }
    return s;
  };
  auto F_vec = [&](const SparseVec& u, const SparseVec& v) {
    Scalar s;
    for (const auto& [i, c] : u)
      for (const auto& [j, d] : v) s += c * d * F(i / nh, i % nh, j / nk, j % nk);
    return s;
  };
  std::vector<SparseVec> psi = sparse_columns(psi_map(pcc));
  auto cosmash_rep = [&](std::size_t x, std::size_t xi) {
    SparseVec r;
    for (const auto& [q, s] : C.coproduct(x))
      sp_axpy(r, s, sp_kron(SparseVec{{q / nc, Scalar(1)}}, nk, K.algebra.multiply(psi[q % nc], {{xi, Scalar(1)}})));
    return r;
  };
  std::vector<SparseVec> hash(na * nh), cosm(nc * nk);
  for (std::size_t i = 0; i < na * nh; ++i)
    hash[i] = sparse(sp.embed(smash_element(pa, sp, unit_vec(na, i / nh), unit_vec(nh, i % nh))));
  for (std::size_t j = 0; j < nc * nk; ++j) cosm[j] = cosmash_rep(j / nk, j % nk);

  Report& rep = out.report;
  rep = Report("smash/cosmash pairing");
  std::vector<std::string> an, cn;
  for (const auto& x : A.names())
    for (const auto& y : H.names()) an.push_back(x + "#" + y);
  for (const auto& x : C.names())
    for (const auto& y : K.names()) cn.push_back(x + ">◂" + y);
  Axis ax = basis_axis(na * nh, an), cx = basis_axis(nc * nk, cn);
  rep.add(check_identity("well-defined on A#H", "⟨⟨⟨b(h₁·1)⊗h₂, y⟩⟩⟩ = ⟨⟨⟨b⊗h, y⟩⟩⟩", {ax, cx}, [&](const Instance& t) {
    return Evaluation{scalar_vec(F_vec(hash[t[0]], {{t[1], Scalar(1)}})), scalar_vec(F(t[0] / nh, t[0] % nh, t[1] / nk, t[1] % nk))};
  }));
  rep.add(check_identity("well-defined on C>◂K", "⟨⟨⟨u, x₁⊗ψ(x₂)ξ⟩⟩⟩ = ⟨⟨⟨u, x⊗ξ⟩⟩⟩", {ax, cx}, [&](const Instance& t) {
    return Evaluation{scalar_vec(F_vec({{t[0], Scalar(1)}}, cosm[t[1]])), scalar_vec(F(t[0] / nh, t[0] % nh, t[1] / nk, t[1] % nk))};
  }));
  const std::size_t n1 = sp.dim(), n2 = cs.dim();
  out.form = Mat(n1, n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      out.form(i, j) = F_vec(from_row(sp.carrier.rows()[i]), from_row(cs.carrier.rows()[j]));
  rep.append(check_pairing(out.form, sp.algebra, cs.coalgebra, false), "");
  rep.set_dim("smash", n1);
  rep.set_dim("cosmash", n2);
  return out;
}

// ---------------------------------------------------------------- C-ring / coring

LeftSplitCoring left_split_coring(const HopfPackage& h, const AlgebraSC& a, const Mat& lambda) {
  const std::size_t na = a.dim(), nh = h.dim(), amb = nh * na;
  if (lambda.rows() != amb || lambda.cols() != na) throw DimensionMismatch("left coaction must be (dim H · dim A) × dim A");
  AlgebraSC T = tensor_algebra(h.algebra, a);
  SparseVec one = sparse(lambda.apply(a.unit()));
  std::vector<SparseVec> proj(amb);
  for (std::size_t i = 0; i < amb; ++i) proj[i] = T.multiply(one, SparseVec{{i, Scalar(1)}});
  LeftSplitCoring out;
  out.carrier = Subspace::span(amb, proj);
  const Subspace& S = out.carrier;
  const std::size_t n = S.dim();
  std::vector<std::string> names;
  for (const auto& x : h.names())
    for (const auto& y : a.names()) names.push_back(x + "⊗" + y);
  std::vector<SparseVec> basis;
  for (const auto& r : S.rows()) basis.push_back(from_row(r));
  auto coords = [&](const SparseVec& v) { return sparse(coordinates_in(S, v, "left split coring")); };

  Bimodule& m = out.coring.module;
  m.base = a;
  m.dim = n;
  m.left.assign(na, std::vector<SparseVec>(n));
  m.right.assign(na, std::vector<SparseVec>(n));
  for (std::size_t b = 0; b < na; ++b) {
    SparseVec lb = sparse(lambda.column(b));
    SparseVec rb;
    for (const auto& [u, c] : sparse(h.algebra.unit())) sp_add(rb, u * na + b, c);
    for (std::size_t x = 0; x < n; ++x) {
      m.left[b][x] = coords(T.multiply(lb, basis[x]));
      m.right[b][x] = coords(T.multiply(basis[x], rb));
    }
  }
  // Δ(h⊗a) = λ(1)(h₁⊗1) ⊗ λ(1)(h₂⊗a)
  std::vector<SparseVec> delta_amb(amb);
  SparseVec a_one = sparse(a.unit());
  for (std::size_t i = 0; i < amb; ++i)
    for (const auto& [p, c] : h.coalgebra.coproduct(i / na)) {
      SparseVec l, r = coords(proj[(p % nh) * na + i % na]);
      for (const auto& [u, d] : a_one) sp_axpy(l, d, proj[(p / nh) * na + u]);
      sp_axpy(delta_amb[i], c, sp_kron(coords(l), n, r));
    }
  out.coring.counit = Mat(na, n);
  for (std::size_t x = 0; x < n; ++x) {
    SparseVec d;
    for (const auto& [i, c] : basis[x]) {
      sp_axpy(d, c, delta_amb[i]);
      Scalar e = c * h.coalgebra.counit()[i / na];
      if (!e.is_zero()) out.coring.counit(i % na, x) += e;
    }
    out.coring.delta.push_back(std::move(d));
  }
  out.coring.names = basis_labels(S, names);
  return out;
}

Report cring_coring_pairing(const HopfPackage& h, const AlgebraSC& a, const Mat& lambda,
                            const PartialModuleCoalgebra& pm, const Mat& kh, const Mat& pairing) {
  const HopfPackage& K = pm.h;
  const CoalgebraSC& C = pm.c;
  const std::size_t na = a.dim(), nh = h.dim(), nk = K.dim(), nc = C.dim();
  if (kh.rows() != nk || kh.cols() != nh) throw DimensionMismatch("pairing form must be dim K × dim H");
  if (pairing.rows() != na || pairing.cols() != nc) throw DimensionMismatch("pairing must be dim A × dim C");
  if (lambda.rows() != nh * na || lambda.cols() != na) throw DimensionMismatch("left coaction must be (dim H · dim A) × dim A");
  for (std::size_t xi = 0; xi < nk; ++xi)
    for (std::size_t x = 0; x < nc; ++x)
      for (std::size_t b = 0; b < na; ++b) {
        Scalar l = pair_ac(pairing, {{b, Scalar(1)}}, pm.basis_action(xi, x));
        Scalar r;
        for (std::size_t i = 0; i < nh * na; ++i)
          if (!lambda(i, b).is_zero()) r += lambda(i, b) * kh(xi, i / na) * pairing(i % na, x);
        if (l != r)
          throw CompatibilityFailure("C-ring/coring pairing: (ξ·x,a) ≠ ⟨ξ,a⁻¹⟩(x,a⁰) at (" + K.names()[xi] + ", " +
                                     C.name(x) + ", " + a.name(b) + ")");
      }
  LeftSplitCoring ls = left_split_coring(h, a, lambda);
  CRing cr = cring(pm);
  const ACoring& co = ls.coring;
  const std::size_t m = ls.carrier.dim(), n = cr.dim();

  // F(h⊗a, ξ⊗c) = ⟨ξ,h⟩(c,a) on the ambient spaces.
  auto F = [&](const SparseVec& y, const SparseVec& z) {
    Scalar s;
    for (const auto& [i, c] : y)
      for (const auto& [j, d] : z) s += c * d * kh(j / nc, i / na) * pairing(i % na, j % nc);
    return s;
  };
  AlgebraSC T = tensor_algebra(h.algebra, a);
  SparseVec one = sparse(lambda.apply(a.unit()));
  std::vector<SparseVec> under(nk * nc);
  for (std::size_t xi = 0; xi < nk; ++xi)
    for (std::size_t c = 0; c < nc; ++c)
      for (const auto& [p, u] : K.coalgebra.coproduct(xi))
        for (const auto& [q, v] : C.coproduct(c)) {
          Scalar e = u * v * C.counit_of(pm.act.column((p / nk) * nc + q / nc));
          if (!e.is_zero()) sp_add(under[xi * nc + c], (p % nk) * nc + q % nc, e);
        }

  Report rep("C-ring/coring pairing");
  rep.set_dim("coring", m);
  rep.set_dim("C-ring", n);
  std::vector<std::string> hn, kn;
  for (const auto& x : h.names())
    for (const auto& y : a.names()) hn.push_back(x + "⊗" + y);
  for (const auto& x : K.names())
    for (const auto& y : C.names()) kn.push_back(x + "⊗" + y);
  if (!is_nondegenerate(pairing)) {
    rep.add_undetermined("L1 well-defined", "⟪λ(1)y, z⟫ = ⟪y, underline{z}⟫",
                         "(,) is degenerate, so the form need not descend to the carriers");
    rep.set_flag("degenerate", true);
  } else {
    rep.add(check_identity("L1 well-defined", "⟪λ(1)y, z⟫ = ⟪y, underline{z}⟫",
                           {basis_axis(nh * na, hn), basis_axis(nk * nc, kn)}, [&](const Instance& t) {
                             SparseVec y{{t[0], Scalar(1)}}, z{{t[1], Scalar(1)}};
                             return Evaluation{scalar_vec(F(T.multiply(one, y), z)), scalar_vec(F(y, under[t[1]]))};
                           }));
    rep.set_flag("degenerate", false);
  }
  std::vector<SparseVec> cb, rb;
  for (const auto& r : ls.carrier.rows()) cb.push_back(from_row(r));
  for (const auto& r : cr.carrier.rows()) rb.push_back(from_row(r));
  Mat G(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = F(cb[i], rb[j]);
  auto Gv = [&](const SparseVec& x, const SparseVec& y) {
    Scalar s;
    for (const auto& [i, c] : x)
      for (const auto& [j, d] : y) s += c * d * G(i, j);
    return s;
  };
  std::vector<SparseVec> rlam = sparse_columns(cr.lambda), rrho = sparse_columns(cr.rho), mu = sparse_columns(cr.mu),
                         eta = sparse_columns(cr.eta);
  Axis aa = basis_axis(na, a.names()), xa = basis_axis(m, co.names), ra = basis_axis(n, cr.names),
       ca = basis_axis(nc, C.names());
  rep.add(check_identity("L2 left", "⟪b·x, m⟫ = (m⁻¹,b)⟪x, m⁰⟫", {aa, xa, ra}, [&](const Instance& t) {
    Scalar r;
    for (const auto& [i, v] : rlam[t[2]]) r += v * pairing(t[0], i / n) * G(t[1], i % n);
    return Evaluation{scalar_vec(Gv(co.module.left[t[0]][t[1]], {{t[2], Scalar(1)}})), scalar_vec(r)};
  }));
  rep.add(check_identity("L2 right", "⟪x·b, m⟫ = ⟪x, m⁰⟫(m¹,b)", {aa, xa, ra}, [&](const Instance& t) {
    Scalar r;
    for (const auto& [i, v] : rrho[t[2]]) r += v * pairing(t[0], i % nc) * G(t[1], i / nc);
    return Evaluation{scalar_vec(Gv(co.module.right[t[0]][t[1]], {{t[2], Scalar(1)}})), scalar_vec(r)};
  }));
  rep.add(check_identity("L3 unit", "⟪x, η(c)⟫ = (c, ε(x))", {xa, ca}, [&](const Instance& t) {
    return Evaluation{scalar_vec(Gv({{t[0], Scalar(1)}}, eta[t[1]])),
                      scalar_vec(pair_ac(pairing, sparse(co.counit.column(t[0])), {{t[1], Scalar(1)}}))};
  }));
  const Subspace& q = cr.cotensor;
  std::vector<std::string> qn;
  for (std::size_t i = 0; i < q.dim(); ++i) qn.push_back("q" + std::to_string(i + 1));
  rep.set_dim("cotensor", q.dim());
  rep.add(check_identity("L4 product", "⟪x, μ(q)⟫ = ⟪x₁, q′⟫⟪x₂, q″⟫", {xa, basis_axis(q.dim(), qn)},
                         [&](const Instance& t) {
                           SparseVec qv = from_row(q.rows()[t[1]]);
                           SparseVec prod;
                           for (const auto& [i, c] : qv) sp_axpy(prod, c, mu[i]);
                           Scalar r;
                           for (const auto& [i, c] : co.delta[t[0]])
                             for (const auto& [j, d] : qv) r += c * d * G(i / m, j / n) * G(i % m, j % n);
                           return Evaluation{scalar_vec(Gv({{t[0], Scalar(1)}}, prod)), scalar_vec(r)};
                         }));
  return rep;
}

}  // namespace phopf
