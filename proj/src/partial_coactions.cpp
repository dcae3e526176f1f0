#include "phopf/partial_coactions.hpp"

#include "phopf/errors.hpp"
#include "phopf/partial_actions.hpp"

namespace phopf {

PartialCoaction::PartialCoaction(HopfPackage kp, AlgebraSC av, Mat r)
    : k(std::move(kp)), a(std::move(av)), rho(std::move(r)) {
  if (rho.rows() != a.dim() * k.dim() || rho.cols() != a.dim())
    throw DimensionMismatch("partial coaction matrix must be (dim A · dim K) × dim A");
}

AlgebraSC tensor_algebra(const AlgebraSC& a, const AlgebraSC& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<const AlgebraSC*> f{&a, &b};
  std::vector<SparseVec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      prod[i * n + j] = tensor_multiply(f, SparseVec{{i, Scalar(1)}}, SparseVec{{j, Scalar(1)}});
  std::vector<std::string> names;
  for (const auto& x : a.names())
    for (const auto& y : b.names()) names.push_back(x + "⊗" + y);
  return AlgebraSC(n, std::move(prod), kron(a.unit(), b.unit()), std::move(names));
}

namespace {

SparseVec unit_sp(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

// (I⊗Δ) on A⊗K.
SparseVec id_delta(const SparseVec& x, const CoalgebraSC& k) {
  const std::size_t nk = k.dim();
  SparseVec r;
  for (const auto& [i, c] : x) sp_axpy(r, c, sp_kron(unit_sp(i / nk), nk * nk, k.coproduct(i % nk)));
  return r;
}

}  // namespace

Report check_partial_coaction(const PartialCoaction& pc) {
  Report rep("partial coaction");
  const AlgebraSC& A = pc.a;
  const HopfPackage& K = pc.k;
  const std::size_t na = A.dim(), nk = K.dim();
  std::vector<const AlgebraSC*> ak{&A, &K.algebra}, akk{&A, &K.algebra, &K.algebra};
  Axis aa = basis_axis(na, A.names());
  std::vector<SparseVec> rho = sparse_columns(pc.rho);
  SparseVec one = sparse(pc.one());
  SparseVec one1 = sp_kron(one, nk, sparse(K.algebra.unit()));
  const std::size_t n3 = na * nk * nk;

  rep.add(check_identity("PRHCA1", "ρ(ab) = ρ(a)ρ(b)", {aa, aa}, [&](const Instance& t) {
    return Evaluation{pc.rho.apply(dense(A.product(t[0], t[1]), na)),
                      dense(tensor_multiply(ak, rho[t[0]], rho[t[1]]), na * nk)};
  }));
  rep.add(check_identity("PRHCA2", "(I⊗ε)ρ(a) = a", {aa}, [&](const Instance& t) {
    Vec r(na);
    for (const auto& [i, c] : rho[t[0]]) r[i / nk] += c * K.coalgebra.counit()[i % nk];
    return Evaluation{r, unit_vec(na, t[0])};
  }));
  auto rho_id = [&](std::size_t a) {
    SparseVec r;
    for (const auto& [i, c] : rho[a]) sp_axpy(r, c, sp_kron(rho[i / nk], nk, unit_sp(i % nk)));
    return r;
  };
  rep.add(check_identity("PRHCA3", "(ρ⊗I)ρ(a) = [(I⊗Δ)ρ(a)](ρ(1_A)⊗1_K)", {aa}, [&](const Instance& t) {
    SparseVec r = tensor_multiply(akk, id_delta(rho[t[0]], K.coalgebra), one1);
    return Evaluation{dense(rho_id(t[0]), n3), dense(r, n3)};
  }));
  bool sym = rep.add_property(check_identity("PRHCA4", "(ρ⊗I)ρ(a) = (ρ(1_A)⊗1_K)[(I⊗Δ)ρ(a)]", {aa},
                                             [&](const Instance& t) {
                                               SparseVec r = tensor_multiply(akk, one1, id_delta(rho[t[0]], K.coalgebra));
                                               return Evaluation{dense(rho_id(t[0]), n3), dense(r, n3)};
                                             }));
  rep.add(check_identity("ρ(a)ρ(1)=ρ(a)=ρ(1)ρ(a)", "ρ(1_A) acts as a unit on the image of ρ", {aa},
                         [&](const Instance& t) {
                           SparseVec l = tensor_multiply(ak, rho[t[0]], one);
                           SparseVec r = tensor_multiply(ak, one, rho[t[0]]);
                           return Evaluation{dense(l == rho[t[0]] ? r : l, na * nk), dense(rho[t[0]], na * nk)};
                         }));
  rep.set_flag("symmetric", sym);
  rep.set_flag("global", is_global(pc));
  return rep;
}

bool is_global(const PartialCoaction& pc) { return pc.one() == kron(pc.a.unit(), pc.k.algebra.unit()); }

PartialCoaction from_left_coaction(const HopfPackage& k, const AlgebraSC& a, const Mat& lambda) {
  const std::size_t na = a.dim(), nk = k.dim();
  if (lambda.rows() != na * nk || lambda.cols() != na) throw DimensionMismatch("left coaction matrix shape");
  Mat rho(na * nk, na);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t xi = 0; xi < nk; ++xi)
      for (std::size_t c = 0; c < na; ++c) rho(c * nk + xi, x) = lambda(xi * na + c, x);
  return PartialCoaction(op_cop_transformers(k, Transform::op_cop), a.opposite(), std::move(rho));
}

PartialCoaction restricted_coaction(const PartialCoaction& global, const Vec& e) {
  const AlgebraSC& B = global.a;
  const std::size_t nb = B.dim(), nk = global.k.dim();
  if (e.size() != nb) throw DimensionMismatch("restricted coaction: idempotent has the wrong length");
  if (!check_partial_coaction(global).passed()) throw CoactionAxiomFailure("restricted coaction: input fails PRHCA");
  if (!is_global(global)) throw NotGlobal("restricted coaction: input coaction is not global");
  if (B.multiply(e, e) != e) throw NotIdempotent("restricted coaction: e² ≠ e");
  for (std::size_t x = 0; x < nb; ++x) {
    Vec v = unit_vec(nb, x);
    if (B.multiply(e, v) != B.multiply(v, e))
      throw NotCentral("restricted coaction: e does not commute with " + B.name(x));
  }
  std::vector<Vec> gens;
  for (std::size_t x = 0; x < nb; ++x) gens.push_back(B.multiply(e, unit_vec(nb, x)));
  Subspace ideal = Subspace::span(nb, gens);
  AlgebraSC a = subalgebra(B, ideal, e);
  const std::size_t na = a.dim();
  Mat emb = ideal.embedding();
  Mat rho(na * nk, na);
  for (std::size_t x = 0; x < na; ++x) {
    Vec v = global.rho.apply(emb.column(x));
    for (std::size_t xi = 0; xi < nk; ++xi) {
      Vec slice(nb);
      for (std::size_t b = 0; b < nb; ++b) slice[b] = v[b * nk + xi];
      Vec c = coordinates_in(ideal, sparse(B.multiply(e, slice)), "restricted coaction");
      for (std::size_t r = 0; r < na; ++r) rho(r * nk + xi, x) = c[r];
    }
  }
  return PartialCoaction(global.k, std::move(a), std::move(rho));
}

ReducedTensor reduced_tensor(const PartialCoaction& pc) {
  Report chk = check_partial_coaction(pc);
  if (!chk.passed()) throw CoactionAxiomFailure("reduced tensor: coaction fails " + chk.first_failure()->id);
  ReducedTensor rt;
  rt.ambient = tensor_algebra(pc.a, pc.k.algebra);
  const std::size_t n = rt.ambient.dim();
  Vec one = pc.one();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(rt.ambient.multiply(unit_vec(n, i), one));
  rt.carrier = Subspace::span(n, gens);
  rt.algebra = subalgebra(rt.ambient, rt.carrier, one);
  return rt;
}

namespace {

struct SplitData {
  const PartialCoaction& pc;
  ReducedTensor rt;
  std::size_t na, nk, n;
  SparseVec one;
  std::vector<SparseVec> basis;   // carrier basis in A⊗K
  std::vector<SparseVec> proj;    // coordinates of (e_i)ρ(1) for ambient basis e_i

  explicit SplitData(const PartialCoaction& p)
      : pc(p), rt(reduced_tensor(p)), na(p.a.dim()), nk(p.k.dim()), n(rt.dim()), one(sparse(p.one())) {
    for (const auto& row : rt.carrier.rows()) basis.push_back(from_row(row));
    for (std::size_t i = 0; i < na * nk; ++i)
      proj.push_back(sparse(coordinates_in(rt.carrier, rt.ambient.multiply(unit_sp(i), one), "split coring")));
  }

  SparseVec project(const SparseVec& y) const {
    SparseVec r;
    for (const auto& [i, c] : y) sp_axpy(r, c, proj[i]);
    return r;
  }
  SparseVec coords(const SparseVec& y) const {
    return sparse(coordinates_in(rt.carrier, y, "partial split algebroid"));
  }
  // Δ̃(a⊗ξ) = proj(a⊗ξ₁) ⊗ proj(1⊗ξ₂)
  SparseVec delta_amb(std::size_t i) const {
    std::size_t a = i / nk, xi = i % nk;
    SparseVec r;
    SparseVec unit_a = sparse(pc.a.unit());
    for (const auto& [q, c] : pc.k.coalgebra.coproduct(xi)) {
      SparseVec right = project(sp_kron(unit_a, nk, unit_sp(q % nk)));
      sp_axpy(r, c, sp_kron(proj[a * nk + q / nk], n, right));
    }
    return r;
  }
  Vec eps_amb(std::size_t i) const { return pc.k.coalgebra.counit()[i % nk] * unit_vec(na, i / nk); }
  Vec eps_of(const SparseVec& y) const {
    Vec r = zeros(na);
    for (const auto& [i, c] : y) axpy(r, c, eps_amb(i));
    return r;
  }
  // S̃(a⊗ξ) = ρ(a)(1⊗S(ξ))
  SparseVec anti_amb(std::size_t i) const {
    std::size_t a = i / nk, xi = i % nk;
    SparseVec s = sp_kron(sparse(pc.a.unit()), nk, sparse(pc.k.S().column(xi)));
    return coords(rt.ambient.multiply(sparse(pc.rho.column(a)), s));
  }

  template <class F>
  auto extend(const SparseVec& y, F&& f) const {
    decltype(f(std::size_t{0})) r{};
    for (const auto& [i, c] : y) add(r, c, f(i));
    return r;
  }
  static void add(SparseVec& r, const Scalar& c, const SparseVec& v) { sp_axpy(r, c, v); }

  Bimodule bimodule() const {
    Bimodule m;
    m.base = pc.a;
    m.dim = n;
    m.left.assign(na, std::vector<SparseVec>(n));
    m.right.assign(na, std::vector<SparseVec>(n));
    SparseVec unit_k = sparse(pc.k.algebra.unit());
    for (std::size_t b = 0; b < na; ++b) {
      SparseVec bl = sp_kron(unit_sp(b), nk, unit_k);
      SparseVec br = sparse(pc.rho.column(b));
      for (std::size_t x = 0; x < n; ++x) {
        m.left[b][x] = coords(rt.ambient.multiply(bl, basis[x]));
        m.right[b][x] = coords(rt.ambient.multiply(basis[x], br));
      }
    }
    return m;
  }

  void check_well_defined(const BalancedPair& pair, bool with_antipode) const {
    for (std::size_t i = 0; i < na * nk; ++i) {
      SparseVec y = rt.ambient.multiply(unit_sp(i), one);
      std::string where = rt.ambient.name(i);
      if (pair.project(extend(y, [&](std::size_t j) { return delta_amb(j); })) != pair.project(delta_amb(i)))
        throw WellDefinednessFailure("Δ̃ depends on the representative of " + where);
      if (eps_of(y) != eps_amb(i))
        throw WellDefinednessFailure("ε̃ depends on the representative of " + where);
      if (with_antipode && extend(y, [&](std::size_t j) { return anti_amb(j); }) != anti_amb(i))
        throw WellDefinednessFailure("S̃ depends on the representative of " + where);
    }
  }
};

}  // namespace

ACoring split_coring(const PartialCoaction& pc) {
  SplitData sd(pc);
  ACoring c;
  c.module = sd.bimodule();
  c.names = sd.rt.algebra.names();
  c.counit = Mat(sd.na, sd.n);
  for (std::size_t x = 0; x < sd.n; ++x) {
    c.delta.push_back(sd.extend(sd.basis[x], [&](std::size_t j) { return sd.delta_amb(j); }));
    Vec e = sd.eps_of(sd.basis[x]);
    for (std::size_t r = 0; r < sd.na; ++r) c.counit(r, x) = e[r];
  }
  sd.check_well_defined(BalancedPair(c.module), false);
  return c;
}

HopfAlgebroid partial_split_hopf_algebroid(const PartialCoaction& pc) {
  Report chk = check_partial_coaction(pc);
  if (!chk.passed()) throw CoactionAxiomFailure("partial split algebroid: coaction fails " + chk.first_failure()->id);
  if (!chk.flag("symmetric")) throw PreconditionFailure("partial coaction is symmetric");
  if (!pc.k.algebra.is_commutative()) throw PreconditionFailure("K is commutative");
  if (!pc.a.is_commutative()) throw PreconditionFailure("base algebra is commutative");
  if (!pc.k.antipode) throw PreconditionFailure("K has an antipode");
  ACoring cor = split_coring(pc);
  SplitData sd(pc);
  const std::size_t na = sd.na, nk = sd.nk, n = sd.n;
  HopfAlgebroid h;
  h.total = sd.rt.algebra;
  h.base = pc.a;
  h.s_l = Mat(n, na);
  h.t_l = Mat(n, na);
  SparseVec unit_k = sparse(pc.k.algebra.unit());
  for (std::size_t a = 0; a < na; ++a) {
    for (const auto& [k, c] : sd.project(sp_kron(unit_sp(a), nk, unit_k))) h.s_l(k, a) = c;
    for (const auto& [k, c] : sd.coords(sparse(pc.rho.column(a)))) h.t_l(k, a) = c;
  }
  h.s_r = h.t_l;
  h.t_r = h.s_l;
  h.delta_l = h.delta_r = cor.delta;
  h.eps_l = h.eps_r = cor.counit;
  Mat anti(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [k, c] : sd.extend(sd.basis[x], [&](std::size_t j) { return sd.anti_amb(j); }))
      anti(k, x) = c;
  h.antipode = std::move(anti);
  sd.check_well_defined(BalancedPair(cor.module), true);
  return h;
}

HopfAlgebroid split_hopf_algebroid(const PartialCoaction& pc) {
  Report chk = check_partial_coaction(pc);
  if (!chk.passed()) throw CoactionAxiomFailure("split algebroid: coaction fails " + chk.first_failure()->id);
  if (!chk.flag("global")) throw PreconditionFailure("coaction is global");
  if (!pc.k.algebra.is_commutative()) throw PreconditionFailure("K is commutative");
  if (!pc.a.is_commutative()) throw PreconditionFailure("base algebra is commutative");
  if (!pc.k.antipode) throw PreconditionFailure("K has an antipode");
  const std::size_t na = pc.a.dim(), nk = pc.k.dim(), n = na * nk;
  HopfAlgebroid h;
  h.total = tensor_algebra(pc.a, pc.k.algebra);
  h.base = pc.a;
  h.s_l = Mat(n, na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t xi = 0; xi < nk; ++xi) h.s_l(a * nk + xi, a) = pc.k.algebra.unit()[xi];
  h.t_l = pc.rho;
  h.s_r = h.t_l;
  h.t_r = h.s_l;
  h.eps_l = Mat(na, n);
  Mat anti(n, n);
  SparseVec unit_a = sparse(pc.a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = i / nk, xi = i % nk;
    SparseVec d;
    for (const auto& [q, c] : pc.k.coalgebra.coproduct(xi))
      sp_axpy(d, c, sp_kron(unit_sp(a * nk + q / nk), n, sp_kron(unit_a, nk, unit_sp(q % nk))));
    h.delta_l.push_back(d);
    h.eps_l(a, i) = pc.k.coalgebra.counit()[xi];
    Vec s = h.total.multiply(pc.rho.column(a), kron(pc.a.unit(), pc.k.S().column(xi)));
    for (std::size_t r = 0; r < n; ++r) anti(r, i) = s[r];
  }
  h.delta_r = h.delta_l;
  h.eps_r = h.eps_l;
  h.antipode = std::move(anti);
  return h;
}

// ---------------------------------------------------------------- left dual ring

Report left_dual_ring_compare(const PartialCoaction& pc, const HopfPackage& hp, const Mat& form) {
  const std::size_t na = pc.a.dim(), nk = pc.k.dim(), nh = hp.dim();
  if (form.rows() != nh || form.cols() != nk) throw DimensionMismatch("left dual ring: pairing form shape");
  Report rep("left dual ring");
  Report pr = check_pairing(form, hp, pc.k, PairingKind::hopf, false);
  rep.append(pr, "pairing:");
  if (!pr.passed()) {
    rep.add_undetermined("Θ", "Θ is an algebra isomorphism", "the H–K pairing fails its axioms");
    return rep;
  }
  Report chk = check_partial_coaction(pc);
  if (!chk.passed()) throw CoactionAxiomFailure("left dual ring: coaction fails " + chk.first_failure()->id);

  ACoring cor = split_coring(pc);
  SplitData sd(pc);
  const std::size_t n = sd.n;
  const Bimodule& m = cor.module;

  // *𝒞: left A-linear maps f : 𝒞 → A, stored as vectors indexed r*n + x.
  Mat cond(na * n * na, na * n);
  for (std::size_t b = 0; b < na; ++b)
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t row0 = (b * n + x) * na;
      for (const auto& [y, c] : m.left[b][x])
        for (std::size_t r = 0; r < na; ++r) cond(row0 + r, r * n + y) += c;
      for (std::size_t s = 0; s < na; ++s)
        for (const auto& [r, c] : pc.a.product(b, s)) cond(row0 + r, s * n + x) -= c;
    }
  Subspace dual = kernel(cond);
  const std::size_t dd = dual.dim();
  auto as_map = [&](const Vec& v) {
    Mat f(na, n);
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t x = 0; x < n; ++x) f(r, x) = v[r * n + x];
    return f;
  };
  auto as_vec = [&](const Mat& f) {
    Vec v(na * n);
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t x = 0; x < n; ++x) v[r * n + x] = f(r, x);
    return v;
  };
  // (f*g)(x) = g(x₁·f(x₂))
  auto convolve = [&](const Mat& f, const Mat& g) {
    Mat out(na, n);
    for (std::size_t x = 0; x < n; ++x) {
      Vec val(na);
      for (const auto& [q, c] : cor.delta[x]) {
        SparseVec moved = m.act_right(SparseVec{{q / n, Scalar(1)}}, f.column(q % n));
        axpy(val, c, g.apply(dense(moved, n)));
      }
      for (std::size_t r = 0; r < na; ++r) out(r, x) = val[r];
    }
    return out;
  };
  rep.set_dim("left dual ring", dd);

  // (A^op # H^cop)^op with h·a = a⁰⟨h,a¹⟩.
  Mat act(na, nh * na);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t i = 0; i < na * nk; ++i)
        if (!pc.rho(i, a).is_zero()) act(i / nk, h * na + a) += pc.rho(i, a) * form(h, i % nk);
  PartialAction opa(op_cop_transformers(hp, Transform::cop), pc.a.opposite(), act);
  Report ac = check_partial_action(opa);
  rep.append(ac, "A^op action:");
  if (!ac.passed()) {
    rep.add_undetermined("Θ", "Θ is an algebra isomorphism", "the induced action on A^op fails its axioms");
    return rep;
  }
  SmashProduct sp = smash_product(opa);
  AlgebraSC target = sp.algebra.opposite();
  const std::size_t ns = target.dim();
  rep.set_dim("(A^op#H^cop)^op", ns);

  // Θ(a#h)(x) = a·(id⊗⟨h,−⟩)(x), extended linearly from ambient a⊗h.
  std::vector<Mat> theta;
  for (std::size_t u = 0; u < ns; ++u) {
    Mat f(na, n);
    for (const auto& [k, c] : from_row(sp.carrier.rows()[u])) {
      std::size_t a = k / nh, h = k % nh;
      for (std::size_t x = 0; x < n; ++x) {
        Vec slice(na);
        for (const auto& [i, v] : sd.basis[x]) slice[i / nk] += v * form(h, i % nk);
        Vec val = pc.a.multiply(unit_vec(na, a), slice);
        for (std::size_t r = 0; r < na; ++r) f(r, x) += c * val[r];
      }
    }
    theta.push_back(std::move(f));
  }
  Axis sa = basis_axis(ns, target.names());
  rep.add(check_identity("Θ(u)∈*𝒞", "Θ(u) is left A-linear", {sa}, [&](const Instance& t) {
    Vec v = as_vec(theta[t[0]]);
    SparseVec red = dual.reduce(sparse(v));
    return Evaluation{dense(red, na * n), zeros(na * n)};
  }));
  std::vector<Vec> cols;
  for (const auto& f : theta) cols.push_back(as_vec(f));
  std::size_t rank = Subspace::span(na * n, cols).dim();
  rep.add_fact("Θ injective", "Θ has trivial kernel", rank == ns);
  rep.add_fact("Θ bijective", "Θ is a linear isomorphism onto *𝒞", rank == ns && ns == dd);
  rep.add(check_identity("Θ(uv)=Θ(u)*Θ(v)", "Θ is multiplicative", {sa, sa}, [&](const Instance& t) {
    Mat l(na, n);
    for (const auto& [k, c] : target.product(t[0], t[1])) l = l + c * theta[k];
    return Evaluation{as_vec(l), as_vec(convolve(theta[t[0]], theta[t[1]]))};
  }));
  {
    Mat u(na, n);
    for (std::size_t k = 0; k < ns; ++k)
      if (!target.unit()[k].is_zero()) u = u + target.unit()[k] * theta[k];
    rep.add_fact("Θ(1)=ε̃", "Θ is unital", u == cor.counit);
  }
  return rep;
}

}  // namespace phopf
