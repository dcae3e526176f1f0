#include "phopf/partial_actions.hpp"

#include "phopf/errors.hpp"

namespace phopf {

PartialAction::PartialAction(HopfPackage hp, AlgebraSC av, Mat m)
    : h(std::move(hp)), a(std::move(av)), act(std::move(m)) {
  if (act.rows() != a.dim() || act.cols() != h.dim() * a.dim())
    throw DimensionMismatch("partial action matrix must be dim A × (dim H · dim A)");
  cols_ = sparse_columns(act);
}

Vec PartialAction::apply(const Vec& hv, const Vec& av) const {
  const std::size_t na = a.dim();
  if (hv.size() != h.dim() || av.size() != na) throw DimensionMismatch("partial action arguments");
  Vec r(na);
  for (std::size_t i = 0; i < hv.size(); ++i) {
    if (hv[i].is_zero()) continue;
    for (std::size_t j = 0; j < na; ++j) {
      if (av[j].is_zero()) continue;
      Scalar c = hv[i] * av[j];
      for (const auto& [k, v] : cols_[i * na + j]) r[k] += c * v;
    }
  }
  return r;
}

Report check_partial_action(const PartialAction& pa) {
  Report rep("partial action");
  const HopfPackage& H = pa.h;
  const AlgebraSC& A = pa.a;
  const std::size_t nh = H.dim(), na = A.dim();
  Axis ha = basis_axis(nh, H.names()), aa = basis_axis(na, A.names());
  auto eh = [&](std::size_t i) { return unit_vec(nh, i); };
  auto ea = [&](std::size_t i) { return unit_vec(na, i); };
  std::vector<Vec> h1;  // h·1_A
  for (std::size_t i = 0; i < nh; ++i) h1.push_back(pa.apply(eh(i), A.unit()));

  rep.add(check_identity("PLA1", "1_H·a = a", {aa}, [&](const Instance& t) {
    return Evaluation{pa.apply(H.algebra.unit(), ea(t[0])), ea(t[0])};
  }));
  rep.add(check_identity("PLA2", "h·(ab) = (h₁·a)(h₂·b)", {ha, aa, aa}, [&](const Instance& t) {
    Vec l = pa.apply(eh(t[0]), dense(A.product(t[1], t[2]), na));
    Vec r(na);
    for (const auto& [q, c] : H.coalgebra.coproduct(t[0]))
      axpy(r, c, A.multiply(pa.apply(eh(q / nh), ea(t[1])), pa.apply(eh(q % nh), ea(t[2]))));
    return Evaluation{l, r};
  }));
  auto lhs3 = [&](const Instance& t) { return pa.apply(eh(t[0]), pa.apply(eh(t[1]), ea(t[2]))); };
  rep.add(check_identity("PLA3", "h·(k·a) = (h₁·1_A)(h₂k·a)", {ha, ha, aa}, [&](const Instance& t) {
    Vec r(na);
    for (const auto& [q, c] : H.coalgebra.coproduct(t[0])) {
      Vec hk = dense(H.algebra.product(q % nh, t[1]), nh);
      axpy(r, c, A.multiply(h1[q / nh], pa.apply(hk, ea(t[2]))));
    }
    return Evaluation{lhs3(t), r};
  }));
  bool sym = rep.add_property(check_identity("PLA3′", "h·(k·a) = (h₁k·a)(h₂·1_A)", {ha, ha, aa},
                                             [&](const Instance& t) {
                                               Vec r(na);
                                               for (const auto& [q, c] : H.coalgebra.coproduct(t[0])) {
                                                 Vec hk = dense(H.algebra.product(q / nh, t[1]), nh);
                                                 axpy(r, c, A.multiply(pa.apply(hk, ea(t[2])), h1[q % nh]));
                                               }
                                               return Evaluation{lhs3(t), r};
                                             }));
  rep.set_flag("symmetric", sym);
  rep.set_flag("global", is_global(pa));
  return rep;
}

bool is_global(const PartialAction& pa) {
  for (std::size_t i = 0; i < pa.h.dim(); ++i)
    if (pa.apply(unit_vec(pa.h.dim(), i), pa.a.unit()) != pa.h.coalgebra.counit()[i] * pa.a.unit())
      return false;
  return true;
}

PartialAction mirror(const RightPartialAction& ra) {
  const std::size_t nh = ra.h.dim(), na = ra.a.dim();
  if (ra.act.rows() != na || ra.act.cols() != na * nh)
    throw DimensionMismatch("right partial action matrix must be dim A × (dim A · dim H)");
  Mat m(na, nh * na);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t r = 0; r < na; ++r) m(r, h * na + x) = ra.act(r, x * nh + h);
  return PartialAction(op_cop_transformers(ra.h, Transform::op_cop), ra.a.opposite(), std::move(m));
}

Report check_right_partial_action(const RightPartialAction& ra) {
  Report left = check_partial_action(mirror(ra));
  Report rep("right partial action");
  for (auto r : left.axioms()) {
    if (r.id == "PLA1") r.statement = "a·1_H = a";
    if (r.id == "PLA2") r.statement = "(ab)·h = (a·h₁)(b·h₂)";
    if (r.id == "PLA3") r.statement = "(a·k)·h = (a·kh₁)(1_A·h₂)";
    if (r.id == "PLA3′") r.statement = "(a·k)·h = (1_A·h₁)(a·kh₂)";
    if (r.informational)
      rep.add_property(std::move(r));
    else
      rep.add(std::move(r));
  }
  for (const auto& [k, v] : left.flags()) rep.set_flag(k, v);
  return rep;
}

PartialAction induced_partial_action(const PartialAction& global, const Vec& e) {
  const AlgebraSC& B = global.a;
  const std::size_t nb = B.dim(), nh = global.h.dim();
  if (e.size() != nb) throw DimensionMismatch("induced action: idempotent has the wrong length");
  if (!check_partial_action(global).passed()) throw ActionAxiomFailure("induced action: input fails PLA1–PLA3");
  if (!is_global(global)) throw NotGlobal("induced action: input action is not global");
  if (B.multiply(e, e) != e) throw NotIdempotent("induced action: e² ≠ e");
  for (std::size_t x = 0; x < nb; ++x) {
    Vec v = unit_vec(nb, x);
    if (B.multiply(e, v) != B.multiply(v, e))
      throw NotCentral("induced action: e does not commute with " + B.name(x));
  }
  std::vector<Vec> gens;
  for (std::size_t x = 0; x < nb; ++x) gens.push_back(B.multiply(e, unit_vec(nb, x)));
  Subspace ideal = Subspace::span(nb, gens);
  AlgebraSC a = subalgebra(B, ideal, e);
  const std::size_t na = a.dim();
  Mat emb = ideal.embedding();
  Mat act(na, nh * na);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t x = 0; x < na; ++x) {
      Vec v = B.multiply(e, global.apply(unit_vec(nh, h), emb.column(x)));
      Vec c = coordinates_in(ideal, sparse(v), "induced action");
      for (std::size_t r = 0; r < na; ++r) act(r, h * na + x) = c[r];
    }
  return PartialAction(global.h, std::move(a), std::move(act));
}

// ---------------------------------------------------------------- smash product

namespace {

struct SmashData {
  const PartialAction& pa;
  std::size_t na, nh;
  std::vector<SparseVec> one_act;  // h·1_A

  explicit SmashData(const PartialAction& p) : pa(p), na(p.a.dim()), nh(p.h.dim()) {
    for (std::size_t h = 0; h < nh; ++h) one_act.push_back(sparse(pa.apply(unit_vec(nh, h), pa.a.unit())));
  }

  // a ⊗ h ↦ a(h₁·1)⊗h₂ on ambient basis vectors.
  SparseVec phi_basis(std::size_t a, std::size_t h) const {
    SparseVec r;
    for (const auto& [q, c] : pa.h.coalgebra.coproduct(h)) {
      SparseVec left = pa.a.multiply(SparseVec{{a, Scalar(1)}}, one_act[q / nh]);
      sp_axpy(r, c, sp_kron(left, nh, SparseVec{{q % nh, Scalar(1)}}));
    }
    return r;
  }
  SparseVec phi(const SparseVec& x) const {
    SparseVec r;
    for (const auto& [k, c] : x) sp_axpy(r, c, phi_basis(k / nh, k % nh));
    return r;
  }
  // (a⊗h)(b⊗k) = a(h₁·b)⊗h₂k on ambient vectors.
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec r;
    for (const auto& [i, c] : x) {
      std::size_t a = i / nh, h = i % nh;
      for (const auto& [j, d] : y) {
        std::size_t b = j / nh, k = j % nh;
        for (const auto& [q, e] : pa.h.coalgebra.coproduct(h)) {
          SparseVec hb = sparse(pa.apply(unit_vec(nh, q / nh), unit_vec(na, b)));
          SparseVec left = pa.a.multiply(SparseVec{{a, Scalar(1)}}, hb);
          sp_axpy(r, c * d * e, sp_kron(left, nh, pa.h.algebra.product(q % nh, k)));
        }
      }
    }
    return r;
  }
};

std::vector<std::string> ambient_names(const AlgebraSC& a, const std::vector<std::string>& h) {
  std::vector<std::string> out;
  for (const auto& x : a.names())
    for (const auto& y : h) out.push_back(x + "#" + y);
  return out;
}

}  // namespace

Vec SmashProduct::embed(const Vec& coords) const { return carrier.embedding().apply(coords); }

std::optional<Vec> SmashProduct::project(const Vec& ambient) const { return carrier.coordinates(ambient); }

SmashProduct smash_product(const PartialAction& pa) {
  Report chk = check_partial_action(pa);
  if (!chk.passed()) throw ActionAxiomFailure("smash product: action fails " + chk.first_failure()->id);
  SmashData sd(pa);
  const std::size_t na = sd.na, nh = sd.nh, amb = na * nh;
  SmashProduct sp;
  sp.dim_a = na;
  sp.dim_h = nh;
  std::vector<SparseVec> gens;
  for (std::size_t k = 0; k < amb; ++k) gens.push_back(sd.phi_basis(k / nh, k % nh));
  sp.carrier = Subspace::span(amb, gens);
  const std::size_t d = sp.carrier.dim();
  std::vector<SparseVec> basis;
  for (const auto& row : sp.carrier.rows()) basis.push_back(from_row(row));
  std::vector<SparseVec> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      prod[i * d + j] = sparse(coordinates_in(sp.carrier, sd.multiply(basis[i], basis[j]), "smash product"));
  SparseVec one = sd.phi(sp_kron(sparse(pa.a.unit()), nh, sparse(pa.h.algebra.unit())));
  Vec unit = coordinates_in(sp.carrier, one, "smash unit");
  auto names = ambient_names(pa.a, pa.h.names());
  sp.algebra = AlgebraSC(d, std::move(prod), std::move(unit), basis_labels(sp.carrier, names));

  sp.report = Report("smash product");
  sp.report.append(check_algebra(sp.algebra), "");
  Axis aa = basis_axis(na, pa.a.names()), ha = basis_axis(nh, pa.h.names());
  sp.report.add(check_identity("a#h=a(h₁·1)#h₂", "the generators satisfy the rewriting rule", {aa, ha},
                               [&](const Instance& t) {
                                 SparseVec x = sd.phi_basis(t[0], t[1]);
                                 return Evaluation{dense(x, amb), dense(sd.phi(x), amb)};
                               }));
  sp.report.set_dim("carrier", d);
  return sp;
}

Vec smash_element(const PartialAction& pa, const SmashProduct& sp, const Vec& a, const Vec& h) {
  SmashData sd(pa);
  SparseVec x = sd.phi(sparse(kron(a, h)));
  return coordinates_in(sp.carrier, x, "smash element");
}

HopfAlgebroid smash_hopf_algebroid(const PartialAction& pa) {
  Report chk = check_partial_action(pa);
  if (!chk.passed()) throw ActionAxiomFailure("smash algebroid: action fails " + chk.first_failure()->id);
  if (!chk.flag("symmetric")) throw PreconditionFailure("partial action is symmetric");
  if (!pa.h.coalgebra.is_cocommutative()) throw PreconditionFailure("H is cocommutative");
  if (!pa.a.is_commutative()) throw PreconditionFailure("base algebra is commutative");
  if (!pa.h.antipode) throw PreconditionFailure("H has an antipode");

  SmashProduct sp = smash_product(pa);
  SmashData sd(pa);
  const std::size_t na = sd.na, nh = sd.nh, amb = na * nh, n = sp.dim();
  const Subspace& C = sp.carrier;
  const Mat& S = pa.h.S();
  const CoalgebraSC& Hc = pa.h.coalgebra;

  // Carrier coordinates of a#h on basis pairs.
  std::vector<SparseVec> hash(amb);
  for (std::size_t k = 0; k < amb; ++k)
    hash[k] = sparse(coordinates_in(C, sd.phi_basis(k / nh, k % nh), "smash algebroid"));
  auto hash_vec = [&](const Vec& a, const Vec& h) {
    SparseVec r;
    for (std::size_t i = 0; i < na; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < nh; ++j)
        if (!h[j].is_zero()) sp_axpy(r, a[i] * h[j], hash[i * nh + j]);
    }
    return r;
  };
  auto eh = [&](std::size_t i) { return unit_vec(nh, i); };
  auto ea = [&](std::size_t i) { return unit_vec(na, i); };

  // Structure maps on ambient basis vectors a⊗h.
  auto delta_amb = [&](std::size_t a, std::size_t h) {
    SparseVec r;
    for (const auto& [q, c] : Hc.coproduct(h))
      sp_axpy(r, c, sp_kron(hash[a * nh + q / nh], n, hash_vec(pa.a.unit(), eh(q % nh))));
    return r;
  };
  auto epsl_amb = [&](std::size_t a, std::size_t h) {
    return pa.a.multiply(ea(a), pa.apply(eh(h), pa.a.unit()));
  };
  auto epsr_amb = [&](std::size_t a, std::size_t h) { return pa.apply(S.column(h), ea(a)); };
  auto anti_amb = [&](std::size_t a, std::size_t h) {
    SparseVec r;
    for (const auto& [q, c] : Hc.coproduct(h))
      sp_axpy(r, c, hash_vec(pa.apply(S.column(q % nh), ea(a)), S.column(q / nh)));
    return r;
  };

  HopfAlgebroid hh;
  hh.total = sp.algebra;
  hh.base = pa.a;
  Mat s(n, na);
  for (std::size_t a = 0; a < na; ++a) {
    SparseVec v = hash_vec(ea(a), pa.h.algebra.unit());
    for (const auto& [k, c] : v) s(k, a) = c;
  }
  hh.s_l = hh.t_l = hh.s_r = hh.t_r = s;
  hh.eps_l = Mat(na, n);
  hh.eps_r = Mat(na, n);
  Mat anti(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    SparseVec d;
    Vec el(na), er(na);
    SparseVec sb;
    for (const auto& [k, c] : from_row(C.rows()[b])) {
      std::size_t a = k / nh, h = k % nh;
      sp_axpy(d, c, delta_amb(a, h));
      axpy(el, c, epsl_amb(a, h));
      axpy(er, c, epsr_amb(a, h));
      sp_axpy(sb, c, anti_amb(a, h));
    }
    hh.delta_l.push_back(d);
    for (std::size_t r = 0; r < na; ++r) {
      hh.eps_l(r, b) = el[r];
      hh.eps_r(r, b) = er[r];
    }
    for (const auto& [k, c] : sb) anti(k, b) = c;
  }
  hh.delta_r = hh.delta_l;
  hh.antipode = std::move(anti);

  // The formulas are stated on generators a#h; they must not depend on the representative a⊗h.
  BalancedPair pair(hh.bimodule(Side::left));
  for (std::size_t k = 0; k < amb; ++k) {
    std::size_t a = k / nh, h = k % nh;
    SparseVec phi = sd.phi_basis(a, h);
    SparseVec d;
    Vec el(na), er(na);
    SparseVec sb;
    for (const auto& [j, c] : phi) {
      sp_axpy(d, c, delta_amb(j / nh, j % nh));
      axpy(el, c, epsl_amb(j / nh, j % nh));
      axpy(er, c, epsr_amb(j / nh, j % nh));
      sp_axpy(sb, c, anti_amb(j / nh, j % nh));
    }
    std::string where = pa.a.name(a) + "#" + pa.h.names()[h];
    if (pair.project(d) != pair.project(delta_amb(a, h)))
      throw WellDefinednessFailure("Δ depends on the representative of " + where);
    if (el != epsl_amb(a, h)) throw WellDefinednessFailure("ε_l depends on the representative of " + where);
    if (er != epsr_amb(a, h)) throw WellDefinednessFailure("ε_r depends on the representative of " + where);
    if (sb != anti_amb(a, h)) throw WellDefinednessFailure("𝒮 depends on the representative of " + where);
  }
  return hh;
}

}  // namespace phopf
