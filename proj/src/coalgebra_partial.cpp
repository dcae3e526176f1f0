#include "phopf/coalgebra_partial.hpp"

#include "phopf/errors.hpp"

namespace phopf {

namespace {

SparseVec unit_sp(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

// Replaces tensor factor k (of dimension dims[k]) by f applied to it; f[i] has dimension out.
SparseVec apply_factor(const SparseVec& x, const std::vector<std::size_t>& dims, std::size_t k,
                       const std::vector<SparseVec>& f, std::size_t out) {
  std::size_t inner = 1;
  for (std::size_t j = k + 1; j < dims.size(); ++j) inner *= dims[j];
  const std::size_t mid = dims[k];
  SparseVec r;
  for (const auto& [i, c] : x) {
    std::size_t hi = i / (mid * inner), m = (i / inner) % mid, lo = i % inner;
    for (const auto& [j, v] : f[m]) sp_add(r, (hi * out + j) * inner + lo, c * v);
  }
  return r;
}

std::vector<SparseVec> identity_map(std::size_t n) {
  std::vector<SparseVec> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(unit_sp(i));
  return r;
}

std::vector<SparseVec> counit_map(const CoalgebraSC& c) {
  std::vector<SparseVec> r;
  for (std::size_t i = 0; i < c.dim(); ++i) r.push_back(c.counit()[i].is_zero() ? SparseVec{} : SparseVec{{0, c.counit()[i]}});
  return r;
}

std::vector<SparseVec> coproduct_map(const CoalgebraSC& c) {
  std::vector<SparseVec> r;
  for (std::size_t i = 0; i < c.dim(); ++i) r.push_back(c.coproduct(i));
  return r;
}

SparseVec apply_map(const std::vector<SparseVec>& f, const SparseVec& x) {
  SparseVec r;
  for (const auto& [i, c] : x) sp_axpy(r, c, f[i]);
  return r;
}

Scalar counit_of(const CoalgebraSC& c, const SparseVec& x) {
  Scalar s;
  for (const auto& [i, v] : x) s += v * c.counit()[i];
  return s;
}

}  // namespace

// ---------------------------------------------------------------- module coalgebras

PartialModuleCoalgebra::PartialModuleCoalgebra(HopfPackage hp, CoalgebraSC cv, Mat a)
    : h(std::move(hp)), c(std::move(cv)), act(std::move(a)) {
  if (act.rows() != c.dim() || act.cols() != h.dim() * c.dim())
    throw DimensionMismatch("partial module coalgebra matrix must be dim C × (dim H · dim C)");
}

Report check_partial_module_coalgebra(const PartialModuleCoalgebra& pm) {
  Report rep("partial module coalgebra");
  rep.append(check_package(pm.h, PackageLevel::bialgebra), "H:");
  rep.append(check_coalgebra(pm.c), "C:");
  const HopfPackage& H = pm.h;
  const CoalgebraSC& C = pm.c;
  const std::size_t nh = H.dim(), nc = C.dim();
  std::vector<SparseVec> act;
  for (std::size_t i = 0; i < nh * nc; ++i) act.push_back(sparse(pm.act.column(i)));
  auto dot = [&](const SparseVec& hv, const SparseVec& cv) {
    SparseVec r;
    for (const auto& [hi, a] : hv)
      for (const auto& [ci, b] : cv) sp_axpy(r, a * b, act[hi * nc + ci]);
    return r;
  };
  // Σ f(h₁,c₁) ⊗ g(h₂,c₂) over the coproducts of basis elements h, c.
  auto split = [&](std::size_t h, std::size_t c, auto&& fn) {
    for (const auto& [p, a] : H.coalgebra.coproduct(h))
      for (const auto& [q, b] : C.coproduct(c)) fn(a * b, p / nh, p % nh, q / nc, q % nc);
  };
  Axis hx = basis_axis(nh, H.names()), cx = basis_axis(nc, C.names());
  rep.add(check_identity("PLHMC1", "Δ(h·c) = (h₁·c₁)⊗(h₂·c₂)", {hx, cx}, [&](const Instance& t) {
    SparseVec r;
    split(t[0], t[1], [&](const Scalar& s, std::size_t h1, std::size_t h2, std::size_t c1, std::size_t c2) {
      sp_axpy(r, s, sp_kron(act[h1 * nc + c1], nc, act[h2 * nc + c2]));
    });
    return Evaluation{dense(C.comultiply(act[t[0] * nc + t[1]]), nc * nc), dense(r, nc * nc)};
  }));
  rep.add(check_identity("PLHMC2", "1_H·c = c", {cx}, [&](const Instance& t) {
    return Evaluation{dense(dot(sparse(H.algebra.unit()), unit_sp(t[0])), nc), unit_vec(nc, t[0])};
  }));
  auto lhs3 = [&](std::size_t h, std::size_t k, std::size_t c) { return dot(unit_sp(h), act[k * nc + c]); };
  rep.add(check_identity("PLHMC3", "h·(k·c) = (hk₁·c₁)ε(k₂·c₂)", {hx, hx, cx}, [&](const Instance& t) {
    SparseVec r;
    split(t[1], t[2], [&](const Scalar& s, std::size_t k1, std::size_t k2, std::size_t c1, std::size_t c2) {
      Scalar e = counit_of(C, act[k2 * nc + c2]);
      if (!e.is_zero()) sp_axpy(r, s * e, dot(H.algebra.product(t[0], k1), unit_sp(c1)));
    });
    return Evaluation{dense(lhs3(t[0], t[1], t[2]), nc), dense(r, nc)};
  }));
  bool sym = rep.add_property(check_identity("PLHMC3′", "h·(k·c) = ε(k₁·c₁)(hk₂·c₂)", {hx, hx, cx},
                                             [&](const Instance& t) {
                                               SparseVec r;
                                               split(t[1], t[2], [&](const Scalar& s, std::size_t k1, std::size_t k2,
                                                                     std::size_t c1, std::size_t c2) {
                                                 Scalar e = counit_of(C, act[k1 * nc + c1]);
                                                 if (!e.is_zero())
                                                   sp_axpy(r, s * e, dot(H.algebra.product(t[0], k2), unit_sp(c2)));
                                               });
                                               return Evaluation{dense(lhs3(t[0], t[1], t[2]), nc), dense(r, nc)};
                                             }));
  rep.add(check_identity("h·c=ε(h₁·c₁)(h₂·c₂)", "counit applied to the first leg of PLHMC1", {hx, cx},
                         [&](const Instance& t) {
                           SparseVec r;
                           split(t[0], t[1], [&](const Scalar& s, std::size_t h1, std::size_t h2, std::size_t c1,
                                                 std::size_t c2) {
                             sp_axpy(r, s * counit_of(C, act[h1 * nc + c1]), act[h2 * nc + c2]);
                           });
                           return Evaluation{dense(act[t[0] * nc + t[1]], nc), dense(r, nc)};
                         }));
  rep.add(check_identity("h·c=(h₁·c₁)ε(h₂·c₂)", "counit applied to the second leg of PLHMC1", {hx, cx},
                         [&](const Instance& t) {
                           SparseVec r;
                           split(t[0], t[1], [&](const Scalar& s, std::size_t h1, std::size_t h2, std::size_t c1,
                                                 std::size_t c2) {
                             sp_axpy(r, s * counit_of(C, act[h2 * nc + c2]), act[h1 * nc + c1]);
                           });
                           return Evaluation{dense(act[t[0] * nc + t[1]], nc), dense(r, nc)};
                         }));
  rep.add(check_identity("ε(h·c)=ε(h₁·c₁)ε(h₂·c₂)", "counit of the partial action is multiplicative", {hx, cx},
                         [&](const Instance& t) {
                           Scalar r;
                           split(t[0], t[1], [&](const Scalar& s, std::size_t h1, std::size_t h2, std::size_t c1,
                                                 std::size_t c2) {
                             r += s * counit_of(C, act[h1 * nc + c1]) * counit_of(C, act[h2 * nc + c2]);
                           });
                           return Evaluation{Vec{counit_of(C, act[t[0] * nc + t[1]])}, Vec{r}};
                         }));
  rep.set_flag("symmetric", sym);
  rep.set_flag("global", is_global(pm));
  return rep;
}

bool is_global(const PartialModuleCoalgebra& pm) {
  const std::size_t nh = pm.h.dim(), nc = pm.c.dim();
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t c = 0; c < nc; ++c)
      if (counit_of(pm.c, pm.basis_action(h, c)) != pm.h.coalgebra.counit()[h] * pm.c.counit()[c]) return false;
  return true;
}

PartialModuleCoalgebra mirror(const RightPartialModuleCoalgebra& r) {
  const std::size_t nh = r.h.dim(), nc = r.c.dim();
  if (r.act.rows() != nc || r.act.cols() != nc * nh)
    throw DimensionMismatch("right partial module coalgebra matrix must be dim C × (dim C · dim H)");
  Mat m(nc, nh * nc);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t y = 0; y < nc; ++y) m(y, h * nc + x) = r.act(y, x * nh + h);
  return PartialModuleCoalgebra(op_cop_transformers(r.h, Transform::op_cop), r.c.co_opposite(), std::move(m));
}

Report check_right_partial_module_coalgebra(const RightPartialModuleCoalgebra& r) {
  Report left = check_partial_module_coalgebra(mirror(r));
  Report rep("right partial module coalgebra");
  for (auto a : left.axioms()) {
    if (a.id == "PLHMC1") a.statement = "Δ(c·h) = (c₁·h₁)⊗(c₂·h₂)";
    if (a.id == "PLHMC2") a.statement = "c·1_H = c";
    if (a.id == "PLHMC3") a.statement = "(c·k)·h = ε(c₁·k₁)(c₂·k₂h)";
    if (a.id == "PLHMC3′") a.statement = "(c·k)·h = (c₁·k₁h)ε(c₂·k₂)";
    if (a.informational)
      rep.add_property(std::move(a));
    else
      rep.add(std::move(a));
  }
  for (const auto& [k, v] : left.flags()) rep.set_flag(k, v);
  return rep;
}

Report check_coalgebra_projection(const Mat& p, const CoalgebraSC& c) {
  const std::size_t n = c.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("coalgebra projection must be dim C × dim C");
  Report rep("coalgebra projection");
  std::vector<SparseVec> pm = sparse_columns(p);
  Axis cx = basis_axis(n, c.names());
  rep.add(check_identity("P²=P", "P∘P = P", {cx}, [&](const Instance& t) {
    return Evaluation{dense(apply_map(pm, pm[t[0]]), n), dense(pm[t[0]], n)};
  }));
  rep.add(check_identity("ΔP=(P⊗P)Δ", "P is comultiplicative", {cx}, [&](const Instance& t) {
    SparseVec r = apply_factor(apply_factor(c.coproduct(t[0]), {n, n}, 0, pm, n), {n, n}, 1, pm, n);
    return Evaluation{dense(c.comultiply(pm[t[0]]), n * n), dense(r, n * n)};
  }));
  rep.add(check_identity("P(c)=c₁ε(P(c₂))", "P(c) = c₁ε(P(c₂))", {cx}, [&](const Instance& t) {
    Vec r = zeros(n);
    for (const auto& [q, s] : c.coproduct(t[0])) r[q / n] += s * counit_of(c, pm[q % n]);
    return Evaluation{dense(pm[t[0]], n), r};
  }));
  rep.add(check_identity("P(c)=ε(P(c₁))c₂", "P(c) = ε(P(c₁))c₂", {cx}, [&](const Instance& t) {
    Vec r = zeros(n);
    for (const auto& [q, s] : c.coproduct(t[0])) r[q % n] += s * counit_of(c, pm[q / n]);
    return Evaluation{dense(pm[t[0]], n), r};
  }));
  return rep;
}

// ---------------------------------------------------------------- group actions

bool operator==(const CoalgebraGroupAction& a, const CoalgebraGroupAction& b) {
  if (!(a.g == b.g) || !(a.c == b.c) || a.p != b.p || a.theta.size() != b.theta.size()) return false;
  for (std::size_t gi = 0; gi < a.g.order(); ++gi) {
    const Mat& pa = a.p[a.g.inv(gi)];
    if (!(a.theta[gi] * pa == b.theta[gi] * pa)) return false;
  }
  return true;
}

Report check_group_action_on_coalgebra(const CoalgebraGroupAction& ga) {
  const FiniteGroup& g = ga.g;
  const CoalgebraSC& c = ga.c;
  const std::size_t n = c.dim(), og = g.order();
  if (ga.p.size() != og || ga.theta.size() != og) throw MalformedTable("one projection and one θ per group element");
  for (std::size_t gi = 0; gi < og; ++gi)
    if (ga.p[gi].rows() != n || ga.p[gi].cols() != n || ga.theta[gi].rows() != n || ga.theta[gi].cols() != n)
      throw MalformedTable("projection or θ for " + g.name(gi) + " is not dim C × dim C");
  Report rep("partial group action on a coalgebra");
  rep.append(check_coalgebra(c), "C:");
  std::vector<Mat> tp;
  for (std::size_t gi = 0; gi < og; ++gi) {
    rep.append(check_coalgebra_projection(ga.p[gi], c), "(i) P_" + g.name(gi) + ":");
    tp.push_back(ga.theta[gi] * ga.p[g.inv(gi)]);
  }
  Axis gx = basis_axis(og, g.names()), cx = basis_axis(n, c.names());
  rep.add(check_identity("(i) Δθ_g=(θ_g⊗θ_g)Δ", "θ_g is comultiplicative on C_{g⁻¹}", {gx, cx}, [&](const Instance& t) {
    std::vector<SparseVec> th = sparse_columns(ga.theta[t[0]]);
    SparseVec x = sparse(ga.p[g.inv(t[0])].column(t[1]));
    SparseVec r = apply_factor(apply_factor(c.comultiply(x), {n, n}, 0, th, n), {n, n}, 1, th, n);
    return Evaluation{dense(c.comultiply(tp[t[0]].column(t[1])), n * n), dense(r, n * n)};
  }));
  rep.add(check_identity("(i) εθ_g=ε", "θ_g is counital on C_{g⁻¹}", {gx, cx}, [&](const Instance& t) {
    return Evaluation{Vec{c.counit_of(tp[t[0]].column(t[1]))}, Vec{c.counit_of(ga.p[g.inv(t[0])].column(t[1]))}};
  }));
  rep.add(check_identity("(i) θ_g(C_{g⁻¹})⊆C_g", "P_g∘θ_g∘P_{g⁻¹} = θ_g∘P_{g⁻¹}", {gx, cx}, [&](const Instance& t) {
    return Evaluation{ga.p[t[0]].apply(tp[t[0]].column(t[1])), tp[t[0]].column(t[1])};
  }));
  rep.add(check_identity("(i) θ_g bijective", "rank θ_g∘P_{g⁻¹} = rank P_{g⁻¹} = rank P_g", {gx},
                         [&](const Instance& t) {
                           Vec l{Scalar(static_cast<long long>(tp[t[0]].rank())),
                                 Scalar(static_cast<long long>(ga.p[t[0]].rank()))};
                           Vec r{Scalar(static_cast<long long>(ga.p[g.inv(t[0])].rank())), l[0]};
                           return Evaluation{l, r};
                         }));
  Mat id = Mat::identity(n);
  rep.add_fact("(ii) P_e=id", "C_e = C and P_e = id", ga.p[g.unit()] == id);
  rep.add_fact("(ii) θ_e=id", "θ_e = id", ga.theta[g.unit()] == id);
  auto col = [&](const Mat& m, std::size_t x) { return m.column(x); };
  rep.add(check_identity("(iii) P_h∘P_g=P_g∘P_h", "the projections commute", {gx, gx, cx}, [&](const Instance& t) {
    return Evaluation{col(ga.p[t[1]] * ga.p[t[0]], t[2]), col(ga.p[t[0]] * ga.p[t[1]], t[2])};
  }));
  rep.add(check_identity("(iii) θ_{h⁻¹}P_{g⁻¹}P_h=P_{(gh)⁻¹}θ_{h⁻¹}P_h", "θ and the projections are compatible",
                         {gx, gx, cx}, [&](const Instance& t) {
                           std::size_t gi = t[0], h = t[1], hi = g.inv(h), ghi = g.inv(g.mul(gi, h));
                           Mat l = ga.theta[hi] * ga.p[g.inv(gi)] * ga.p[h];
                           Mat r = ga.p[ghi] * ga.theta[hi] * ga.p[h];
                           return Evaluation{col(l, t[2]), col(r, t[2])};
                         }));
  rep.add(check_identity("(iii) θ_gθ_hP_{h⁻¹}P_{(gh)⁻¹}=θ_{gh}P_{h⁻¹}P_{(gh)⁻¹}", "θ composes on overlaps",
                         {gx, gx, cx}, [&](const Instance& t) {
                           std::size_t gi = t[0], h = t[1], gh = g.mul(gi, h);
                           Mat base = ga.p[g.inv(h)] * ga.p[g.inv(gh)];
                           return Evaluation{col(ga.theta[gi] * ga.theta[h] * base, t[2]), col(ga.theta[gh] * base, t[2])};
                         }));
  return rep;
}

PartialModuleCoalgebra group_to_kG(const CoalgebraGroupAction& ga) {
  Report chk = check_group_action_on_coalgebra(ga);
  if (!chk.passed()) throw ActionAxiomFailure("group action on coalgebra fails " + chk.first_failure()->id);
  const std::size_t n = ga.c.dim(), og = ga.g.order();
  Mat act(n, og * n);
  for (std::size_t gi = 0; gi < og; ++gi) {
    Mat m = ga.theta[gi] * ga.p[ga.g.inv(gi)];
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) act(y, gi * n + x) = m(y, x);
  }
  HopfPackage h = group_algebra(ga.g);
  return PartialModuleCoalgebra(std::move(h), ga.c, std::move(act));
}

CoalgebraGroupAction kG_to_group(const PartialModuleCoalgebra& pm, const FiniteGroup& g) {
  if (!(pm.h == group_algebra(g))) throw PreconditionFailure("H is the group algebra of the given group");
  Report chk = check_partial_module_coalgebra(pm);
  if (!chk.passed()) throw ActionAxiomFailure("partial module coalgebra fails " + chk.first_failure()->id);
  const CoalgebraSC& c = pm.c;
  const std::size_t n = c.dim(), og = g.order();
  CoalgebraGroupAction ga{g, c, {}, {}};
  for (std::size_t gi = 0; gi < og; ++gi) {
    std::size_t gin = g.inv(gi);
    Mat p1(n, n), p2(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& [q, s] : c.coproduct(x)) {
        p1(q % n, x) += s * counit_of(c, pm.basis_action(gin, q / n));
        p2(q / n, x) += s * counit_of(c, pm.basis_action(gin, q % n));
      }
    if (!(p1 == p2))
      throw NotSymmetric("P_" + g.name(gi) + ": ε(δ_{g⁻¹}·c₁)c₂ and c₁ε(δ_{g⁻¹}·c₂) disagree");
    ga.p.push_back(p1);
  }
  for (std::size_t gi = 0; gi < og; ++gi) {
    Mat th(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) th(y, x) = pm.act(y, gi * n + x);
    ga.theta.push_back(th * ga.p[g.inv(gi)]);
  }
  return ga;
}

CoalgebraSC subcoalgebra(const CoalgebraSC& c, const Subspace& s) {
  const std::size_t n = c.dim(), d = s.dim();
  std::vector<SparseVec> cop;
  Vec counit(d);
  const auto& piv = s.pivots();
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec v = from_row(s.rows()[i]);
    SparseVec dv = c.comultiply(v);
    SparseVec coords;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        auto it = dv.find(piv[a] * n + piv[b]);
        if (it != dv.end()) coords[a * d + b] = it->second;
      }
    SparseVec back;
    for (const auto& [q, x] : coords)
      sp_axpy(back, x, sp_kron(from_row(s.rows()[q / d]), n, from_row(s.rows()[q % d])));
    if (back != dv) throw ProjectionFailure("the image is not a subcoalgebra");
    cop.push_back(std::move(coords));
    counit[i] = counit_of(c, v);
  }
  return CoalgebraSC(d, std::move(cop), std::move(counit), basis_labels(s, c.names()));
}

PartialModuleCoalgebra induced_module_coalgebra(const PartialModuleCoalgebra& global, const Mat& p) {
  Report chk = check_partial_module_coalgebra(global);
  if (!chk.passed()) throw ActionAxiomFailure("induced module coalgebra: input fails " + chk.first_failure()->id);
  if (!chk.flag("global")) throw PreconditionFailure("input action is global");
  Report pr = check_coalgebra_projection(p, global.c);
  if (!pr.passed()) throw ProjectionFailure("induced module coalgebra: P fails " + pr.first_failure()->id);
  const std::size_t n = global.c.dim(), nh = global.h.dim();
  std::vector<Vec> cols;
  for (std::size_t x = 0; x < n; ++x) cols.push_back(p.column(x));
  Subspace d = Subspace::span(n, cols);
  CoalgebraSC dc = subcoalgebra(global.c, d);
  const std::size_t m = d.dim();
  Mat act(m, nh * m);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t i = 0; i < m; ++i) {
      Vec v = global.act.apply(kron(unit_vec(nh, h), d.basis_vector(i)));
      Vec pv = coordinates_in(d, sparse(p.apply(v)), "induced module coalgebra");
      for (std::size_t r = 0; r < m; ++r) act(r, h * m + i) = pv[r];
    }
  return PartialModuleCoalgebra(global.h, std::move(dc), std::move(act));
}

// ---------------------------------------------------------------- C-ring

CRing cring(const PartialModuleCoalgebra& pm) {
  Report chk = check_partial_module_coalgebra(pm);
  if (!chk.passed()) throw ActionAxiomFailure("C-ring: module coalgebra fails " + chk.first_failure()->id);
  if (!chk.flag("symmetric")) throw NotSymmetric("C-ring: the partial module coalgebra is not symmetric");
  const HopfPackage& H = pm.h;
  const CoalgebraSC& C = pm.c;
  const std::size_t nh = H.dim(), nc = C.dim(), amb = nh * nc;
  std::vector<std::vector<Scalar>> eps(nh, std::vector<Scalar>(nc));
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t c = 0; c < nc; ++c) eps[h][c] = counit_of(C, pm.basis_action(h, c));

  // underline{h⊗c} = ε(h₁·c₁)h₂⊗c₂
  std::vector<SparseVec> under(amb);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t c = 0; c < nc; ++c)
      for (const auto& [p, a] : H.coalgebra.coproduct(h))
        for (const auto& [q, b] : C.coproduct(c)) {
          Scalar e = a * b * eps[p / nh][q / nc];
          if (!e.is_zero()) sp_add(under[h * nc + c], (p % nh) * nc + q % nc, e);
        }
  CRing cr;
  cr.h = H;
  cr.c = C;
  cr.carrier = Subspace::span(amb, under);
  const std::size_t n = cr.carrier.dim();
  std::vector<std::string> amb_names;
  for (const auto& x : H.names())
    for (const auto& y : C.names()) amb_names.push_back(x + "⊗" + y);
  cr.names = basis_labels(cr.carrier, amb_names);
  std::vector<SparseVec> under_c;
  for (const auto& u : under) under_c.push_back(sparse(coordinates_in(cr.carrier, u, "C-ring carrier")));
  std::vector<SparseVec> basis;
  for (const auto& row : cr.carrier.rows()) basis.push_back(from_row(row));

  // λ(underline{h⊗c}) = h₁·c₁ ⊗ underline{h₂⊗c₂};  ρ(underline{h⊗c}) = underline{h⊗c₁} ⊗ c₂
  auto lam_amb = [&](std::size_t i) {
    std::size_t h = i / nc, c = i % nc;
    SparseVec r;
    for (const auto& [p, a] : H.coalgebra.coproduct(h))
      for (const auto& [q, b] : C.coproduct(c))
        sp_axpy(r, a * b, sp_kron(pm.basis_action(p / nh, q / nc), n, under_c[(p % nh) * nc + q % nc]));
    return r;
  };
  auto rho_amb = [&](std::size_t i) {
    std::size_t h = i / nc, c = i % nc;
    SparseVec r;
    for (const auto& [q, b] : C.coproduct(c)) sp_axpy(r, b, sp_kron(under_c[h * nc + q / nc], nc, unit_sp(q % nc)));
    return r;
  };
  auto ext = [&](const SparseVec& y, auto&& f) {
    SparseVec r;
    for (const auto& [i, c] : y) sp_axpy(r, c, f(i));
    return r;
  };
  for (std::size_t i = 0; i < amb; ++i) {
    if (ext(under[i], lam_amb) != lam_amb(i))
      throw WellDefinednessFailure("C-ring: λ depends on the representative of " + amb_names[i]);
    if (ext(under[i], rho_amb) != rho_amb(i))
      throw WellDefinednessFailure("C-ring: ρ depends on the representative of " + amb_names[i]);
  }
  cr.lambda = Mat(nc * n, n);
  cr.rho = Mat(n * nc, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [k, v] : ext(basis[x], lam_amb)) cr.lambda(k, x) = v;
    for (const auto& [k, v] : ext(basis[x], rho_amb)) cr.rho(k, x) = v;
  }
  // (underline{h⊗c})(underline{k⊗d}) = underline{ε(h₁·c)ε(k₁·d₁)h₂k₂⊗d₂}
  auto mu_amb = [&](std::size_t i, std::size_t j) {
    std::size_t h = i / nc, c = i % nc, k = j / nc, d = j % nc;
    SparseVec r;
    for (const auto& [p, a] : H.coalgebra.coproduct(h)) {
      Scalar e1 = a * eps[p / nh][c];
      if (e1.is_zero()) continue;
      for (const auto& [q, b] : H.coalgebra.coproduct(k))
        for (const auto& [s, w] : C.coproduct(d)) {
          Scalar e = e1 * b * w * eps[q / nh][s / nc];
          if (e.is_zero()) continue;
          for (const auto& [hk, u] : H.algebra.product(p % nh, q % nh)) sp_axpy(r, e * u, under_c[hk * nc + s % nc]);
        }
    }
    return r;
  };
  cr.mu = Mat(n, n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec r;
      for (const auto& [i, a] : basis[x])
        for (const auto& [j, b] : basis[y]) sp_axpy(r, a * b, mu_amb(i, j));
      for (const auto& [k, v] : r) cr.mu(k, x * n + y) = v;
    }
  cr.eta = Mat(n, nc);
  for (std::size_t c = 0; c < nc; ++c) {
    SparseVec r;
    for (const auto& [h, a] : sparse(H.algebra.unit())) sp_axpy(r, a, under_c[h * nc + c]);
    for (const auto& [k, v] : r) cr.eta(k, c) = v;
  }
  // □^C = ker(ρ⊗I − I⊗λ)
  std::vector<SparseVec> lam = sparse_columns(cr.lambda), rho = sparse_columns(cr.rho);
  Mat eq(n * nc * n, n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec v = unit_sp(x * n + y);
      SparseVec d = apply_factor(v, {n, n}, 0, rho, n * nc);
      sp_axpy(d, Scalar(-1), apply_factor(v, {n, n}, 1, lam, nc * n));
      for (const auto& [k, w] : d) eq(k, x * n + y) = w;
    }
  cr.cotensor = kernel(eq);
  return cr;
}

Report check_cring(const CRing& cr) {
  Report rep("C-ring");
  const CoalgebraSC& C = cr.c;
  const std::size_t n = cr.dim(), nc = C.dim();
  std::vector<SparseVec> lam = sparse_columns(cr.lambda), rho = sparse_columns(cr.rho), mu = sparse_columns(cr.mu),
                         eta = sparse_columns(cr.eta);
  std::vector<SparseVec> cop = coproduct_map(C), eps = counit_map(C), id = identity_map(n);
  Axis xx = basis_axis(n, cr.names), cx = basis_axis(nc, C.names());
  rep.add(check_identity("λ coassociative", "(I⊗λ)λ = (Δ⊗I)λ", {xx}, [&](const Instance& t) {
    SparseVec l = apply_factor(lam[t[0]], {nc, n}, 1, lam, nc * n);
    SparseVec r = apply_factor(lam[t[0]], {nc, n}, 0, cop, nc * nc);
    return Evaluation{dense(l, nc * nc * n), dense(r, nc * nc * n)};
  }));
  rep.add(check_identity("λ counital", "(ε⊗I)λ = I", {xx}, [&](const Instance& t) {
    return Evaluation{dense(apply_factor(lam[t[0]], {nc, n}, 0, eps, 1), n), unit_vec(n, t[0])};
  }));
  rep.add(check_identity("ρ coassociative", "(ρ⊗I)ρ = (I⊗Δ)ρ", {xx}, [&](const Instance& t) {
    SparseVec l = apply_factor(rho[t[0]], {n, nc}, 0, rho, n * nc);
    SparseVec r = apply_factor(rho[t[0]], {n, nc}, 1, cop, nc * nc);
    return Evaluation{dense(l, n * nc * nc), dense(r, n * nc * nc)};
  }));
  rep.add(check_identity("ρ counital", "(I⊗ε)ρ = I", {xx}, [&](const Instance& t) {
    return Evaluation{dense(apply_factor(rho[t[0]], {n, nc}, 1, eps, 1), n), unit_vec(n, t[0])};
  }));
  rep.add(check_identity("bicomodule", "(λ⊗I)ρ = (I⊗ρ)λ", {xx}, [&](const Instance& t) {
    SparseVec l = apply_factor(rho[t[0]], {n, nc}, 0, lam, nc * n);
    SparseVec r = apply_factor(lam[t[0]], {nc, n}, 1, rho, n * nc);
    return Evaluation{dense(l, nc * n * nc), dense(r, nc * n * nc)};
  }));
  rep.add(check_identity("λη=(I⊗η)Δ", "η is left colinear", {cx}, [&](const Instance& t) {
    return Evaluation{dense(apply_map(lam, eta[t[0]]), nc * n),
                      dense(apply_factor(C.coproduct(t[0]), {nc, nc}, 1, eta, n), nc * n)};
  }));
  rep.add(check_identity("ρη=(η⊗I)Δ", "η is right colinear", {cx}, [&](const Instance& t) {
    return Evaluation{dense(apply_map(rho, eta[t[0]]), n * nc),
                      dense(apply_factor(C.coproduct(t[0]), {nc, nc}, 0, eta, n), n * nc)};
  }));

  const Subspace& q = cr.cotensor;
  std::vector<std::string> qnames;
  for (std::size_t i = 0; i < q.dim(); ++i) qnames.push_back("q" + std::to_string(i + 1));
  Axis qx = basis_axis(q.dim(), qnames);
  auto qvec = [&](std::size_t i) { return from_row(q.rows()[i]); };
  rep.set_dim("carrier", n);
  rep.set_dim("cotensor", q.dim());
  rep.add(check_identity("λμ=(I⊗μ)(λ⊗I)", "μ is left colinear on the cotensor", {qx}, [&](const Instance& t) {
    SparseVec v = qvec(t[0]);
    SparseVec l = apply_map(lam, apply_map(mu, v));
    SparseVec r = apply_factor(apply_factor(v, {n, n}, 0, lam, nc * n), {nc, n * n}, 1, mu, n);
    return Evaluation{dense(l, nc * n), dense(r, nc * n)};
  }));
  rep.add(check_identity("ρμ=(μ⊗I)(I⊗ρ)", "μ is right colinear on the cotensor", {qx}, [&](const Instance& t) {
    SparseVec v = qvec(t[0]);
    SparseVec l = apply_map(rho, apply_map(mu, v));
    SparseVec r = apply_factor(apply_factor(v, {n, n}, 1, rho, n * nc), {n * n, nc}, 0, mu, n);
    return Evaluation{dense(l, n * nc), dense(r, n * nc)};
  }));

  // (□^C)^3: both adjacent pairs satisfy the cotensor condition.
  std::vector<SparseVec> diff;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec v = unit_sp(x * n + y);
      SparseVec d = apply_factor(v, {n, n}, 0, rho, n * nc);
      sp_axpy(d, Scalar(-1), apply_factor(v, {n, n}, 1, lam, nc * n));
      diff.push_back(d);
    }
  const std::size_t n3 = n * n * n, blk = n * nc * n * n;
  Mat eq3(2 * blk, n3);
  for (std::size_t i = 0; i < n3; ++i) {
    SparseVec v = unit_sp(i);
    for (const auto& [k, w] : apply_factor(v, {n * n, n}, 0, diff, n * nc * n)) eq3(k, i) = w;
    for (const auto& [k, w] : apply_factor(v, {n, n * n}, 1, diff, n * nc * n)) eq3(blk + k, i) = w;
  }
  Subspace triple = kernel(eq3);
  rep.set_dim("triple cotensor", triple.dim());
  std::vector<std::string> tnames;
  for (std::size_t i = 0; i < triple.dim(); ++i) tnames.push_back("t" + std::to_string(i + 1));
  rep.add(check_identity("μ associative", "μ(μ⊗I) = μ(I⊗μ) on the triple cotensor", {basis_axis(triple.dim(), tnames)},
                         [&](const Instance& t) {
                           SparseVec v = from_row(triple.rows()[t[0]]);
                           SparseVec l = apply_map(mu, apply_factor(v, {n * n, n}, 0, mu, n));
                           SparseVec r = apply_map(mu, apply_factor(v, {n, n * n}, 1, mu, n));
                           return Evaluation{dense(l, n), dense(r, n)};
                         }));
  auto left_unit = [&](std::size_t x) { return apply_factor(lam[x], {nc, n}, 0, eta, n); };
  auto right_unit = [&](std::size_t x) { return apply_factor(rho[x], {n, nc}, 1, eta, n); };
  rep.add(check_identity("(η⊗I)λ∈□", "(η⊗I)λ(x) lies in the cotensor", {xx}, [&](const Instance& t) {
    return Evaluation{dense(q.reduce(left_unit(t[0])), n * n), zeros(n * n)};
  }));
  rep.add(check_identity("(I⊗η)ρ∈□", "(I⊗η)ρ(x) lies in the cotensor", {xx}, [&](const Instance& t) {
    return Evaluation{dense(q.reduce(right_unit(t[0])), n * n), zeros(n * n)};
  }));
  rep.add(check_identity("μ(η⊗I)λ=I", "left unit law", {xx}, [&](const Instance& t) {
    return Evaluation{dense(apply_map(mu, left_unit(t[0])), n), unit_vec(n, t[0])};
  }));
  rep.add(check_identity("μ(I⊗η)ρ=I", "right unit law", {xx}, [&](const Instance& t) {
    return Evaluation{dense(apply_map(mu, right_unit(t[0])), n), unit_vec(n, t[0])};
  }));
  return rep;
}

// ---------------------------------------------------------------- comodule coalgebras

PartialComoduleCoalgebra::PartialComoduleCoalgebra(HopfPackage kp, CoalgebraSC cv, Mat l)
    : k(std::move(kp)), c(std::move(cv)), lam(std::move(l)) {
  if (lam.rows() != k.dim() * c.dim() || lam.cols() != c.dim())
    throw DimensionMismatch("partial comodule coalgebra matrix must be (dim K · dim C) × dim C");
}

Mat psi_map(const PartialComoduleCoalgebra& pc) {
  const std::size_t nk = pc.k.dim(), nc = pc.c.dim();
  Mat psi(nk, nc);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < nk * nc; ++i)
      if (!pc.lam(i, c).is_zero()) psi(i / nc, c) += pc.lam(i, c) * pc.c.counit()[i % nc];
  return psi;
}

bool is_global(const PartialComoduleCoalgebra& pc) {
  return psi_map(pc) == unit_counit(pc.c, pc.k.algebra);
}

Report check_partial_comodule_coalgebra(const PartialComoduleCoalgebra& pc) {
  Report rep("partial comodule coalgebra");
  rep.append(check_package(pc.k, PackageLevel::bialgebra), "K:");
  rep.append(check_coalgebra(pc.c), "C:");
  const HopfPackage& K = pc.k;
  const CoalgebraSC& C = pc.c;
  const std::size_t nk = K.dim(), nc = C.dim();
  std::vector<SparseVec> lam = sparse_columns(pc.lam);
  std::vector<SparseVec> psi = sparse_columns(psi_map(pc));
  std::vector<SparseVec> kcop = coproduct_map(K.coalgebra);
  const AlgebraSC& KA = K.algebra;
  Axis cx = basis_axis(nc, C.names());
  const std::size_t kcc = nk * nc * nc, kkc = nk * nk * nc;

  rep.add(check_identity("PLHCC1", "(I⊗Δ)λ(c) = c₁⁻¹c₂⁻¹⊗c₁⁰⊗c₂⁰", {cx}, [&](const Instance& t) {
    SparseVec l = apply_factor(lam[t[0]], {nk, nc}, 1, coproduct_map(C), nc * nc);
    SparseVec r;
    for (const auto& [q, s] : C.coproduct(t[0]))
      for (const auto& [i, a] : lam[q / nc])
        for (const auto& [j, b] : lam[q % nc])
          for (const auto& [kk, u] : KA.product(i / nc, j / nc)) sp_add(r, (kk * nc + i % nc) * nc + j % nc, s * a * b * u);
    return Evaluation{dense(l, kcc), dense(r, kcc)};
  }));
  rep.add(check_identity("PLHCC2", "(ε⊗I)λ(c) = c", {cx}, [&](const Instance& t) {
    return Evaluation{dense(apply_factor(lam[t[0]], {nk, nc}, 0, counit_map(K.coalgebra), 1), nc), unit_vec(nc, t[0])};
  }));
  auto lhs3 = [&](std::size_t c) { return apply_factor(lam[c], {nk, nc}, 1, lam, nk * nc); };
  rep.add(check_identity("PLHCC3", "(I⊗λ)λ(c) = ψ(c₁)(c₂⁻¹)₁⊗(c₂⁻¹)₂⊗c₂⁰", {cx}, [&](const Instance& t) {
    SparseVec r;
    for (const auto& [q, s] : C.coproduct(t[0]))
      for (const auto& [j, b] : lam[q % nc]) {
        for (const auto& [p, w] : kcop[j / nc])
          for (const auto& [x, v] : KA.multiply(psi[q / nc], unit_sp(p / nk)))
            sp_add(r, (x * nk + p % nk) * nc + j % nc, s * b * w * v);
      }
    return Evaluation{dense(lhs3(t[0]), kkc), dense(r, kkc)};
  }));
  bool sym = rep.add_property(check_identity("PLHCC3′", "(I⊗λ)λ(c) = (c₁⁻¹)₁ψ(c₂)⊗(c₁⁻¹)₂⊗c₁⁰", {cx},
                                             [&](const Instance& t) {
                                               SparseVec r;
                                               for (const auto& [q, s] : C.coproduct(t[0]))
                                                 for (const auto& [i, a] : lam[q / nc])
                                                   for (const auto& [p, w] : kcop[i / nc])
                                                     for (const auto& [x, v] : KA.multiply(unit_sp(p / nk), psi[q % nc]))
                                                       sp_add(r, (x * nk + p % nk) * nc + i % nc, s * a * w * v);
                                               return Evaluation{dense(lhs3(t[0]), kkc), dense(r, kkc)};
                                             }));
  rep.add(check_identity("ψ(c₁)λ(c₂)=λ(c)", "first identity of the comodule coalgebra lemma", {cx},
                         [&](const Instance& t) {
                           SparseVec r;
                           for (const auto& [q, s] : C.coproduct(t[0]))
                             for (const auto& [j, b] : lam[q % nc])
                               for (const auto& [x, v] : KA.multiply(psi[q / nc], unit_sp(j / nc)))
                                 sp_add(r, x * nc + j % nc, s * b * v);
                           return Evaluation{dense(r, nk * nc), dense(lam[t[0]], nk * nc)};
                         }));
  rep.add(check_identity("c₁⁻¹ψ(c₂)⊗c₁⁰=λ(c)", "second identity of the comodule coalgebra lemma", {cx},
                         [&](const Instance& t) {
                           SparseVec r;
                           for (const auto& [q, s] : C.coproduct(t[0]))
                             for (const auto& [i, a] : lam[q / nc])
                               for (const auto& [x, v] : KA.multiply(unit_sp(i / nc), psi[q % nc]))
                                 sp_add(r, x * nc + i % nc, s * a * v);
                           return Evaluation{dense(r, nk * nc), dense(lam[t[0]], nk * nc)};
                         }));
  Mat pm = psi_map(pc);
  rep.add(check_identity("ψ*ψ=ψ", "ψ is a convolution idempotent", {cx}, [&](const Instance& t) {
    return Evaluation{convolution(pm, pm, C, KA).column(t[0]), pm.column(t[0])};
  }));
  rep.set_flag("symmetric", sym);
  rep.set_flag("global", is_global(pc));
  return rep;
}

PartialComoduleCoalgebra quotient_comodule_coalgebra(const PartialComoduleCoalgebra& dc, const Subspace& ideal) {
  Report chk = check_partial_comodule_coalgebra(dc);
  if (!chk.passed()) throw ComoduleCoalgebraFailure("quotient: D fails " + chk.first_failure()->id);
  if (!chk.flag("global")) throw PreconditionFailure("D is a global comodule coalgebra");
  const CoalgebraSC& D = dc.c;
  const std::size_t nd = D.dim(), nk = dc.k.dim();
  if (ideal.ambient_dim() != nd) throw DimensionMismatch("quotient: I lives in the wrong space");
  for (const auto& row : ideal.rows()) {
    SparseVec dv = D.comultiply(from_row(row));
    for (std::size_t b = 0; b < nd; ++b) {
      SparseVec slice;
      for (const auto& [q, s] : dv)
        if (q % nd == b) sp_add(slice, q / nd, s);
      if (!ideal.contains(slice)) throw NotACoideal("quotient: Δ(I) ⊄ I⊗D");
    }
  }
  QuotientSpace qs = quotient_by(nd, ideal);
  const std::size_t nc = qs.dim();
  std::vector<SparseVec> pr;
  for (std::size_t i = 0; i < nd; ++i) pr.push_back(qs.project(unit_sp(i)));
  std::vector<SparseVec> cop;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nc; ++i) {
    std::size_t d = qs.free_columns()[i];
    SparseVec r = apply_factor(apply_factor(D.coproduct(d), {nd, nd}, 0, pr, nc), {nc, nd}, 1, pr, nc);
    cop.push_back(std::move(r));
    names.push_back(D.name(d));
  }
  // ε_C solves ε(x₁)x₂ = x = x₁ε(x₂) on the quotient basis.
  Mat sys(2 * nc * nc, nc);
  Vec rhs(2 * nc * nc);
  for (std::size_t x = 0; x < nc; ++x) {
    for (const auto& [q, s] : cop[x]) {
      sys(x * nc + q % nc, q / nc) += s;
      sys(nc * nc + x * nc + q / nc, q % nc) += s;
    }
    rhs[x * nc + x] = Scalar(1);
    rhs[nc * nc + x * nc + x] = Scalar(1);
  }
  auto eps = solve(sys, rhs);
  if (!eps) throw QuotientNotCoalgebra("quotient: D/I admits no counit");
  CoalgebraSC c(nc, std::move(cop), *eps, names);
  if (!check_coalgebra(c).passed()) throw QuotientNotCoalgebra("quotient: D/I is not coassociative");
  // λ(d̄) = d₂⁽⁻¹⁾ ⊗ ε_C(d̄₁) overline{d₂⁽⁰⁾}
  std::vector<SparseVec> lam_amb(nd);
  for (std::size_t d = 0; d < nd; ++d)
    for (const auto& [q, s] : D.coproduct(d)) {
      Scalar e = counit_of(c, pr[q / nd]);
      if (e.is_zero()) continue;
      for (const auto& [j, b] : sparse(dc.lam.column(q % nd)))
        for (const auto& [m, v] : pr[j % nd]) sp_add(lam_amb[d], (j / nd) * nc + m, s * e * b * v);
    }
  for (const auto& row : ideal.rows()) {
    SparseVec r;
    for (const auto& [i, a] : row) sp_axpy(r, a, lam_amb[i]);
    if (!r.empty()) throw WellDefinednessFailure("quotient: λ does not vanish on I");
  }
  Mat lam(nk * nc, nc);
  for (std::size_t i = 0; i < nc; ++i)
    for (const auto& [k, v] : lam_amb[qs.free_columns()[i]]) lam(k, i) = v;
  return PartialComoduleCoalgebra(dc.k, std::move(c), std::move(lam));
}

// ---------------------------------------------------------------- cosmash

CosmashCoproduct cosmash(const PartialComoduleCoalgebra& pc) {
  Report chk = check_partial_comodule_coalgebra(pc);
  if (!chk.passed()) throw ComoduleCoalgebraFailure("cosmash: coaction fails " + chk.first_failure()->id);
  const HopfPackage& K = pc.k;
  const CoalgebraSC& C = pc.c;
  const std::size_t nk = K.dim(), nc = C.dim(), amb = nc * nk;
  std::vector<SparseVec> psi = sparse_columns(psi_map(pc));
  std::vector<SparseVec> lam = sparse_columns(pc.lam);
  // c>◂ξ = c₁⊗ψ(c₂)ξ
  std::vector<SparseVec> under(amb);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t xi = 0; xi < nk; ++xi)
      for (const auto& [q, s] : C.coproduct(c))
        sp_axpy(under[c * nk + xi], s, sp_kron(unit_sp(q / nc), nk, K.algebra.multiply(psi[q % nc], unit_sp(xi))));
  CosmashCoproduct cs;
  cs.dim_c = nc;
  cs.dim_k = nk;
  cs.carrier = Subspace::span(amb, under);
  const std::size_t n = cs.carrier.dim();
  std::vector<SparseVec> uc;
  for (const auto& u : under) uc.push_back(sparse(coordinates_in(cs.carrier, u, "cosmash carrier")));
  auto under_of = [&](const SparseVec& y) {
    SparseVec r;
    for (const auto& [i, a] : y) sp_axpy(r, a, uc[i]);
    return r;
  };
  // Δ̂(c>◂h) = c₁>◂c₂⁻¹h₁ ⊗ c₂⁰>◂h₂
  auto delta_amb = [&](std::size_t i) {
    std::size_t c = i / nk, h = i % nk;
    SparseVec r;
    for (const auto& [q, s] : C.coproduct(c))
      for (const auto& [j, b] : lam[q % nc])
        for (const auto& [p, w] : K.coalgebra.coproduct(h)) {
          SparseVec left = under_of(sp_kron(unit_sp(q / nc), nk, K.algebra.product(j / nc, p / nk)));
          sp_axpy(r, s * b * w, sp_kron(left, n, uc[(j % nc) * nk + p % nk]));
        }
    return r;
  };
  auto eps_amb = [&](std::size_t i) { return C.counit()[i / nk] * K.coalgebra.counit()[i % nk]; };
  auto ext_delta = [&](const SparseVec& y) {
    SparseVec r;
    for (const auto& [i, a] : y) sp_axpy(r, a, delta_amb(i));
    return r;
  };
  auto ext_eps = [&](const SparseVec& y) {
    Scalar r;
    for (const auto& [i, a] : y) r += a * eps_amb(i);
    return r;
  };
  std::vector<std::string> amb_names;
  for (const auto& x : C.names())
    for (const auto& y : K.names()) amb_names.push_back(x + ">◂" + y);
  for (std::size_t i = 0; i < amb; ++i) {
    if (ext_delta(under[i]) != delta_amb(i))
      throw WellDefinednessFailure("cosmash: Δ̂ depends on the representative of " + amb_names[i]);
    if (ext_eps(under[i]) != eps_amb(i))
      throw WellDefinednessFailure("cosmash: ε̂ depends on the representative of " + amb_names[i]);
  }
  std::vector<SparseVec> cop;
  Vec counit(n);
  for (std::size_t x = 0; x < n; ++x) {
    SparseVec v = from_row(cs.carrier.rows()[x]);
    cop.push_back(ext_delta(v));
    counit[x] = ext_eps(v);
  }
  cs.coalgebra = CoalgebraSC(n, std::move(cop), std::move(counit), basis_labels(cs.carrier, amb_names));
  return cs;
}

Report check_cosmash(const CosmashCoproduct& cs) {
  Report rep = check_coalgebra(cs.coalgebra);
  rep.set_dim("carrier", cs.dim());
  return rep;
}

}  // namespace phopf
