#include "phopf/groups.hpp"

#include <set>

#include "phopf/errors.hpp"

namespace phopf {

namespace {

std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(std::to_string(i + 1));
  return r;
}

Vec scalars(std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.emplace_back(static_cast<long long>(x));
  return v;
}

// An axiom result for a predicate over tuples; witnesses are the tuples where it fails.
AxiomResult predicate(std::string id, std::string statement, const std::vector<Axis>& axes,
                      const std::function<bool(const Instance&)>& holds) {
  return check_identity(std::move(id), std::move(statement), axes, [&](const Instance& t) {
    return Evaluation{scalars({holds(t) ? 1 : 0}), scalars({1})};
  });
}

}  // namespace

SetPartialAction::SetPartialAction(FiniteGroup gv, std::size_t nv, std::vector<std::vector<bool>> dom,
                                   std::vector<std::vector<std::int64_t>> mp, std::vector<std::string> pts)
    : g(std::move(gv)), n(nv), domains(std::move(dom)), maps(std::move(mp)), points(std::move(pts)) {
  if (points.empty()) points = point_names(n);
  const std::size_t og = g.order();
  if (domains.size() != og || maps.size() != og || points.size() != n)
    throw MalformedTable("set partial action: one domain and one map per group element");
  for (std::size_t gi = 0; gi < og; ++gi) {
    if (domains[gi].size() != n || maps[gi].size() != n)
      throw MalformedTable("set partial action: row for " + g.name(gi) + " has the wrong length");
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      std::int64_t y = maps[gi][x];
      bool defined = domains[g.inv(gi)][x];
      if (defined != (y >= 0))
        throw MalformedTable("α_" + g.name(gi) + " must be defined exactly on X_" + g.name(g.inv(gi)));
      if (!defined) continue;
      if (y >= static_cast<std::int64_t>(n) || !domains[gi][y] || hit[y])
        throw MalformedTable("α_" + g.name(gi) + " is not a bijection onto X_" + g.name(gi));
      hit[y] = true;
    }
  }
}

SetPartialAction SetPartialAction::global(FiniteGroup g, std::vector<std::vector<std::size_t>> perms,
                                          std::vector<std::string> points) {
  const std::size_t n = perms.empty() ? 0 : perms[0].size();
  std::vector<std::vector<bool>> dom(g.order(), std::vector<bool>(n, true));
  std::vector<std::vector<std::int64_t>> mp(g.order());
  for (std::size_t gi = 0; gi < g.order(); ++gi)
    for (auto y : perms.at(gi)) mp[gi].push_back(static_cast<std::int64_t>(y));
  return SetPartialAction(std::move(g), n, std::move(dom), std::move(mp), std::move(points));
}

Report check_set_partial_action(const SetPartialAction& s) {
  Report rep("set partial action");
  const FiniteGroup& g = s.g;
  const std::size_t n = s.n, e = g.unit();
  Axis gx = basis_axis(g.order(), g.names());
  Axis xx = basis_axis(n, s.points);
  rep.add(check_identity("(a)", "X_e = X and α_e = id", {xx}, [&](const Instance& t) {
    return Evaluation{scalars({s.in(e, t[0]) ? 1 : 0, s.alpha(e, t[0])}),
                      scalars({1, static_cast<std::int64_t>(t[0])})};
  }));
  rep.add(check_identity("(b)", "α_g(X_{g⁻¹}∩X_h) = X_g∩X_{gh}", {gx, gx}, [&](const Instance& t) {
    std::size_t gi = t[0], h = t[1];
    Vec l = zeros(n), r = zeros(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (s.in(g.inv(gi), x) && s.in(h, x)) l[s.alpha(gi, x)] = Scalar(1);
      if (s.in(gi, x) && s.in(g.mul(gi, h), x)) r[x] = Scalar(1);
    }
    return Evaluation{l, r};
  }));
  rep.add(check_identity("(c)", "α_g∘α_h = α_{gh} on X_{h⁻¹}∩X_{(gh)⁻¹}", {gx, gx, xx},
                         [&](const Instance& t) {
                           std::size_t gi = t[0], h = t[1], x = t[2], gh = g.mul(gi, h);
                           if (!s.in(g.inv(h), x) || !s.in(g.inv(gh), x)) return Evaluation{Vec{}, Vec{}};
                           std::int64_t y = s.alpha(h, x);
                           std::int64_t l = s.in(g.inv(gi), y) ? s.alpha(gi, y) : -1;
                           return Evaluation{scalars({l}), scalars({s.alpha(gh, x)})};
                         }));
  rep.set_flag("global", is_global(s));
  return rep;
}

bool is_global(const SetPartialAction& s) {
  for (const auto& d : s.domains)
    for (bool b : d)
      if (!b) return false;
  return true;
}

PartialAction to_kG_partial_action(const SetPartialAction& s) {
  const std::size_t n = s.n, og = s.g.order();
  Mat act(n, og * n);
  for (std::size_t gi = 0; gi < og; ++gi)
    for (std::size_t y = 0; y < n; ++y)
      if (s.alpha(gi, y) >= 0) act(s.alpha(gi, y), gi * n + y) = Scalar(1);
  std::vector<std::string> names;
  for (const auto& p : s.points) names.push_back("χ" + p);
  PartialAction pa(group_algebra(s.g), function_algebra(n, names), std::move(act));
  if (!check_partial_action(pa).passed()) throw ActionAxiomFailure("induced kG action fails its axioms");
  return pa;
}

PartialCoaction to_dual_partial_coaction(const SetPartialAction& s) {
  const std::size_t n = s.n, og = s.g.order();
  Mat rho(n * og, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t gi = 0; gi < og; ++gi)
      if (s.alpha(gi, y) >= 0) rho(s.alpha(gi, y) * og + gi, y) = Scalar(1);
  std::vector<std::string> names;
  for (const auto& p : s.points) names.push_back("χ" + p);
  return PartialCoaction(dual_group_hopf(s.g), function_algebra(n, names), std::move(rho));
}

// ---------------------------------------------------------------- groupoids

Report check_groupoid(const FiniteGroupoid& gd) {
  Report rep("groupoid");
  const std::size_t na = gd.arrow_count(), no = gd.object_count();
  if (gd.compose.size() != na * na || gd.inverse.size() != na || gd.units.size() != no)
    throw MalformedTable("groupoid tables have the wrong size");
  std::vector<std::string> names;
  for (const auto& a : gd.arrows) names.push_back(a.name);
  Axis aa = basis_axis(na, names);
  Axis oo = basis_axis(no, gd.objects);
  rep.add(predicate("composable", "a∘b is defined iff s(a) = t(b), with s(a∘b) = s(b), t(a∘b) = t(a)", {aa, aa},
                    [&](const Instance& t) {
                      std::int64_t c = gd.comp(t[0], t[1]);
                      bool ok = gd.arrows[t[0]].source == gd.arrows[t[1]].target;
                      if (!ok) return c < 0;
                      return c >= 0 && gd.arrows[c].source == gd.arrows[t[1]].source &&
                             gd.arrows[c].target == gd.arrows[t[0]].target;
                    }));
  rep.add(predicate("associativity", "(a∘b)∘c = a∘(b∘c)", {aa, aa, aa}, [&](const Instance& t) {
    std::int64_t ab = gd.comp(t[0], t[1]), bc = gd.comp(t[1], t[2]);
    if (ab < 0 || bc < 0) return true;
    return gd.comp(ab, t[2]) == gd.comp(t[0], bc);
  }));
  rep.add(predicate("units", "1_{t(a)}∘a = a = a∘1_{s(a)}", {aa}, [&](const Instance& t) {
    const Arrow& a = gd.arrows[t[0]];
    return gd.comp(gd.units[a.target], t[0]) == static_cast<std::int64_t>(t[0]) &&
           gd.comp(t[0], gd.units[a.source]) == static_cast<std::int64_t>(t[0]);
  }));
  rep.add(predicate("unit arrows", "1_x : x → x", {oo}, [&](const Instance& t) {
    const Arrow& u = gd.arrows[gd.units[t[0]]];
    return u.source == t[0] && u.target == t[0];
  }));
  rep.add(predicate("inverses", "a⁻¹∘a = 1_{s(a)} and a∘a⁻¹ = 1_{t(a)}", {aa}, [&](const Instance& t) {
    const Arrow& a = gd.arrows[t[0]];
    std::size_t b = gd.inverse[t[0]];
    return gd.comp(b, t[0]) == static_cast<std::int64_t>(gd.units[a.source]) &&
           gd.comp(t[0], b) == static_cast<std::int64_t>(gd.units[a.target]);
  }));
  return rep;
}

FiniteGroupoid groupoid_of_action(const SetPartialAction& s) {
  const FiniteGroup& g = s.g;
  FiniteGroupoid gd;
  gd.objects = s.points;
  std::vector<std::vector<std::int64_t>> index(s.n, std::vector<std::int64_t>(g.order(), -1));
  std::vector<std::size_t> group_of;
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t gi = 0; gi < g.order(); ++gi)
      if (s.in(gi, x)) {
        index[x][gi] = static_cast<std::int64_t>(gd.arrows.size());
        gd.arrows.push_back({static_cast<std::size_t>(s.alpha(g.inv(gi), x)), x,
                             "(" + s.points[x] + "," + g.name(gi) + ")"});
        group_of.push_back(gi);
      }
  const std::size_t na = gd.arrows.size();
  gd.compose.assign(na * na, -1);
  gd.inverse.resize(na);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b)
      if (gd.arrows[a].source == gd.arrows[b].target)
        gd.compose[a * na + b] = index[gd.arrows[a].target][g.mul(group_of[a], group_of[b])];
    gd.inverse[a] = index[gd.arrows[a].source][g.inv(group_of[a])];
  }
  for (std::size_t x = 0; x < s.n; ++x) gd.units.push_back(index[x][g.unit()]);
  return gd;
}

Report check_functor(const StarFunctor& f) {
  Report rep("functor");
  const FiniteGroupoid& gd = f.domain;
  if (f.label.size() != gd.arrow_count()) throw MalformedTable("functor: one label per arrow");
  std::vector<std::string> names;
  for (const auto& a : gd.arrows) names.push_back(a.name);
  Axis aa = basis_axis(gd.arrow_count(), names);
  rep.add(predicate("F(γδ)=F(γ)F(δ)", "F preserves composition", {aa, aa}, [&](const Instance& t) {
    std::int64_t c = gd.comp(t[0], t[1]);
    return c < 0 || f.label[c] == f.codomain.mul(f.label[t[0]], f.label[t[1]]);
  }));
  rep.add(predicate("F(1_x)=e", "F preserves units", {basis_axis(gd.object_count(), gd.objects)},
                    [&](const Instance& t) { return f.label[gd.units[t[0]]] == f.codomain.unit(); }));
  return rep;
}

StarFunctor projection_functor(const FiniteGroupoid& gd, const FiniteGroup& g) {
  StarFunctor f{gd, g, {}};
  for (const auto& a : gd.arrows) {
    // Arrow names are "(x,g)"; group element names may themselves contain commas.
    std::size_t gi = g.order(), best = 0;
    for (std::size_t k = 0; k < g.order(); ++k) {
      std::string tail = "," + g.name(k) + ")";
      if (tail.size() > best && a.name.size() > tail.size() &&
          a.name.compare(a.name.size() - tail.size(), tail.size(), tail) == 0) {
        gi = k;
        best = tail.size();
      }
    }
    if (gi == g.order()) throw MalformedTable("projection functor: arrow " + a.name + " is not of the form (x,g)");
    f.label.push_back(gi);
  }
  if (!check_functor(f).passed()) throw NotAFunctor("π₂ is not a functor on this groupoid");
  return f;
}

StarFunctor projection_functor(const SetPartialAction& s) {
  return projection_functor(groupoid_of_action(s), s.g);
}

Report star_report(const StarFunctor& f) {
  Report rep("star functor");
  const FiniteGroupoid& gd = f.domain;
  std::vector<std::string> names;
  for (const auto& a : gd.arrows) names.push_back(a.name);
  Axis aa = basis_axis(gd.arrow_count(), names);
  rep.add_property(predicate("star injective", "F is injective on every star 𝒮(x)", {aa, aa}, [&](const Instance& t) {
    if (t[0] >= t[1] || gd.arrows[t[0]].source != gd.arrows[t[1]].source) return true;
    return f.label[t[0]] != f.label[t[1]];
  }));
  rep.add_property(predicate("star surjective", "F maps every star 𝒮(x) onto G",
                             {basis_axis(gd.object_count(), gd.objects), basis_axis(f.codomain.order(), f.codomain.names())},
                             [&](const Instance& t) {
                               for (std::size_t a = 0; a < gd.arrow_count(); ++a)
                                 if (gd.arrows[a].source == t[0] && f.label[a] == t[1]) return true;
                               return false;
                             }));
  rep.set_flag("star injective", rep.find("star injective")->verdict == Verdict::pass);
  rep.set_flag("star surjective", rep.find("star surjective")->verdict == Verdict::pass);
  return rep;
}

bool check_star_injective(const StarFunctor& f) { return star_report(f).flag("star injective"); }
bool check_star_surjective(const StarFunctor& f) { return star_report(f).flag("star surjective"); }

SetPartialAction action_from_functor(const StarFunctor& f) {
  if (!check_functor(f).passed()) throw NotAFunctor("action from functor: labels are not functorial");
  if (!check_star_injective(f)) throw NotStarInjective("action from functor: F is not star injective");
  const FiniteGroup& g = f.codomain;
  const FiniteGroupoid& gd = f.domain;
  const std::size_t n = gd.object_count();
  std::vector<std::vector<bool>> dom(g.order(), std::vector<bool>(n, false));
  std::vector<std::vector<std::int64_t>> mp(g.order(), std::vector<std::int64_t>(n, -1));
  for (std::size_t a = 0; a < gd.arrow_count(); ++a) {
    std::size_t gi = f.label[a];
    mp[gi][gd.arrows[a].source] = static_cast<std::int64_t>(gd.arrows[a].target);
    dom[gi][gd.arrows[a].target] = true;
  }
  return SetPartialAction(g, n, std::move(dom), std::move(mp), gd.objects);
}

HopfAlgebroid function_hopf_algebroid(const FiniteGroupoid& gd) {
  const std::size_t n = gd.arrow_count(), m = gd.object_count();
  std::vector<std::string> names, onames;
  for (const auto& a : gd.arrows) names.push_back("χ" + a.name);
  for (const auto& o : gd.objects) onames.push_back("χ" + o);
  HopfAlgebroid h;
  h.total = function_algebra(n, names);
  h.base = function_algebra(m, onames);
  h.s_l = Mat(n, m);
  h.t_l = Mat(n, m);
  h.eps_l = Mat(m, n);
  Mat anti(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.s_l(a, gd.arrows[a].target) = Scalar(1);
    h.t_l(a, gd.arrows[a].source) = Scalar(1);
    anti(gd.inverse[a], a) = Scalar(1);
  }
  for (std::size_t x = 0; x < m; ++x) h.eps_l(x, gd.units[x]) = Scalar(1);
  h.delta_l.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (gd.comp(a, b) >= 0) sp_add(h.delta_l[gd.comp(a, b)], a * n + b, Scalar(1));
  h.s_r = h.t_l;
  h.t_r = h.s_l;
  h.delta_r = h.delta_l;
  h.eps_r = h.eps_l;
  h.antipode = std::move(anti);
  return h;
}

// ---------------------------------------------------------------- dual star injectivity

Mat dual_star_pi(const Mat& f, const HopfPackage& hp, const HopfAlgebroid& hh) {
  const std::size_t na = hh.base.dim(), nh = hp.dim(), n = hh.dim();
  if (f.rows() != n || f.cols() != nh) throw DimensionMismatch("dual star: F must be dim ℋ × dim H");
  Mat pi(n, na * nh);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) {
      Vec v = hh.total.multiply(hh.s_l.column(a), f.column(h));
      for (std::size_t r = 0; r < n; ++r) pi(r, a * nh + h) = v[r];
    }
  return pi;
}

namespace {

// Section of Π with free variables set to zero.
std::optional<Mat> candidate_splitting(const Mat& pi) {
  const std::size_t n = pi.rows(), amb = pi.cols();
  Mat s(amb, n);
  for (std::size_t x = 0; x < n; ++x) {
    auto col = solve(pi, unit_vec(n, x));
    if (!col) return std::nullopt;
    for (std::size_t r = 0; r < amb; ++r) s(r, x) = (*col)[r];
  }
  return s;
}

bool multiplicative(const Mat& sigma, const AlgebraSC& from, const AlgebraSC& to) {
  for (std::size_t x = 0; x < from.dim(); ++x)
    for (std::size_t y = 0; y < from.dim(); ++y)
      if (sigma.apply(dense(from.product(x, y), from.dim())) != to.multiply(sigma.column(x), sigma.column(y)))
        return false;
  return true;
}

// x ↦ σ₀(x)σ₀(1), when σ₀(1) is idempotent.
std::optional<Mat> idempotent_cut(const Mat& s0, const AlgebraSC& from, const AlgebraSC& to) {
  Vec e = s0.apply(from.unit());
  if (to.multiply(e, e) != e) return std::nullopt;
  Mat s(s0.rows(), s0.cols());
  for (std::size_t x = 0; x < s0.cols(); ++x) {
    Vec v = to.multiply(s0.column(x), e);
    for (std::size_t r = 0; r < s0.rows(); ++r) s(r, x) = v[r];
  }
  return s;
}

std::optional<Mat> find_splitting(const Mat& pi, const AlgebraSC& from, const AlgebraSC& to) {
  auto s0 = candidate_splitting(pi);
  if (!s0) return std::nullopt;
  if (multiplicative(*s0, from, to)) return s0;
  auto s1 = idempotent_cut(*s0, from, to);
  if (s1 && pi * *s1 == Mat::identity(pi.rows()) && multiplicative(*s1, from, to)) return s1;
  return std::nullopt;
}

}  // namespace

Report check_dual_star_injective(const Mat& f, const HopfPackage& hp, const HopfAlgebroid& hh,
                                 const std::optional<Mat>& sigma) {
  if (!hp.algebra.is_commutative()) throw PreconditionFailure("H is commutative");
  if (!hh.base.is_commutative()) throw PreconditionFailure("base algebra is commutative");
  const std::size_t na = hh.base.dim(), nh = hp.dim(), n = hh.dim();
  Report rep("dual star injective");
  Mat pi = dual_star_pi(f, hp, hh);
  Axis hx = basis_axis(nh, hp.names());
  rep.add(check_identity("DSI1 F(hk)=F(h)F(k)", "F is multiplicative", {hx, hx}, [&](const Instance& t) {
    return Evaluation{f.apply(dense(hp.algebra.product(t[0], t[1]), nh)),
                      hh.total.multiply(f.column(t[0]), f.column(t[1]))};
  }));
  rep.add_fact("DSI1 F(1)=1", "F is unital", f.apply(hp.algebra.unit()) == hh.total.unit());
  rep.add(check_identity("DSI1 ε̃∘F=η_Aε", "ε_l(F(h)) = ε(h)1_A", {hx}, [&](const Instance& t) {
    return Evaluation{hh.eps_l.apply(f.column(t[0])), hp.coalgebra.counit()[t[0]] * hh.base.unit()};
  }));
  BalancedPair bp(hh.bimodule(Side::left));
  rep.add(check_identity("DSI1 Δ̃∘F=π(F⊗F)Δ", "F intertwines the coproducts", {hx}, [&](const Instance& t) {
    SparseVec l;
    for (const auto& [x, c] : sparse(f.column(t[0]))) sp_axpy(l, c, hh.delta_l[x]);
    SparseVec r;
    for (const auto& [q, c] : hp.coalgebra.coproduct(t[0]))
      sp_axpy(r, c, sp_kron(sparse(f.column(q / nh)), n, sparse(f.column(q % nh))));
    return Evaluation{dense(bp.project(l), bp.dim()), dense(bp.project(r), bp.dim())};
  }));
  if (hh.antipode && hp.antipode)
    rep.add(check_identity("DSI1 S̃∘F=F∘S", "F intertwines the antipodes", {hx}, [&](const Instance& t) {
      return Evaluation{hh.antipode->apply(f.column(t[0])), f.apply(hp.S().column(t[0]))};
    }));
  else
    rep.add_undetermined("DSI1 S̃∘F=F∘S", "F intertwines the antipodes", "an antipode is missing");
  std::size_t rank = pi.rank();
  rep.set_dim("rank Π", rank);
  rep.set_dim("dim A⊗H", na * nh);
  rep.add_fact("DSI2 ℋ=s(A)F(H)", "Π : A⊗H → ℋ is onto", rank == n);
  AlgebraSC target = tensor_algebra(hh.base, hp.algebra);
  if (sigma) {
    const Mat& s = *sigma;
    if (s.rows() != na * nh || s.cols() != n) throw DimensionMismatch("dual star: σ must be (dim A · dim H) × dim ℋ");
    rep.add_fact("DSI3 Π∘σ=id", "σ splits Π", pi * s == Mat::identity(n));
    rep.add_fact("DSI3 σ multiplicative", "σ(xy) = σ(x)σ(y)", multiplicative(s, hh.total, target));
  } else if (rank == n && find_splitting(pi, hh.total, target)) {
    rep.add_fact("DSI3 Π∘σ=id", "σ splits Π", true, "canonical candidate");
    rep.add_fact("DSI3 σ multiplicative", "σ(xy) = σ(x)σ(y)", true, "canonical candidate");
  } else {
    rep.add_undetermined("DSI3", "Π splits as an algebra map", "the canonical candidate is not a multiplicative splitting");
  }
  rep.set_flag("global", rank == na * nh && rank == n);
  return rep;
}

PartialCoaction coaction_from_dual_star(const Mat& f, const std::optional<Mat>& sigma, const HopfPackage& hp,
                                        const HopfAlgebroid& hh) {
  Report rep = check_dual_star_injective(f, hp, hh, sigma);
  if (!rep.passed()) throw DualStarFailure("coaction from dual star: " + rep.first_failure()->id + " fails");
  Mat s;
  if (sigma) {
    s = *sigma;
  } else {
    auto found = find_splitting(dual_star_pi(f, hp, hh), hh.total, tensor_algebra(hh.base, hp.algebra));
    if (!found) throw DualStarFailure("coaction from dual star: no splitting of Π found");
    s = *found;
  }
  return PartialCoaction(hp, hh.base, s * hh.t_l);
}

std::pair<Mat, Mat> functor_dual_star(const StarFunctor& f) {
  const FiniteGroupoid& gd = f.domain;
  const std::size_t n = gd.arrow_count(), m = gd.object_count(), og = f.codomain.order();
  Mat fh(n, og), sigma(m * og, n);
  for (std::size_t a = 0; a < n; ++a) {
    fh(a, f.label[a]) = Scalar(1);
    sigma(gd.arrows[a].target * og + f.label[a], a) = Scalar(1);
  }
  return {fh, sigma};
}

}  // namespace phopf
