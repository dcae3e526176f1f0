#include "phopf/hopf_algebroid.hpp"

namespace phopf {

namespace {

SparseVec unit_sp(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

// Coefficient-wise sum over a pure-tensor expansion of a representative.
template <class F>
void for_pairs(const SparseVec& rep, std::size_t n, F&& f) {
  for (const auto& [k, c] : rep) f(k / n, k % n, c);
}

SparseVec tensor2(const SparseVec& a, std::size_t n, const SparseVec& b) { return sp_kron(a, n, b); }

}  // namespace

// ---------------------------------------------------------------- Bimodule

SparseVec Bimodule::act_left(const Vec& a, const SparseVec& x) const {
  SparseVec r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [k, c] : x) sp_axpy(r, a[i] * c, left[i][k]);
  }
  return r;
}

SparseVec Bimodule::act_right(const SparseVec& x, const Vec& a) const {
  SparseVec r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [k, c] : x) sp_axpy(r, a[i] * c, right[i][k]);
  }
  return r;
}

// ---------------------------------------------------------------- balanced tensors

BalancedPair::BalancedPair(const Bimodule& m) : n_(m.dim) {
  SubspaceBuilder rels(n_ * n_);
  for (std::size_t a = 0; a < m.base.dim(); ++a)
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        SparseVec v = tensor2(m.right[a][x], n_, unit_sp(y));
        sp_axpy(v, Scalar(-1), tensor2(unit_sp(x), n_, m.left[a][y]));
        if (!v.empty()) rels.add(std::move(v));
      }
  q_ = QuotientSpace(n_ * n_, std::move(rels).finish());
  pair_.reserve(n_ * n_);
  for (std::size_t k = 0; k < n_ * n_; ++k) pair_.push_back(q_.project(unit_sp(k)));
}

SparseVec BalancedPair::project(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [k, c] : x) sp_axpy(r, c, pair_[k]);
  return r;
}

BalancedTriple::BalancedTriple(const Bimodule& inner, const Bimodule& outer)
    : n_(inner.dim), pair_(inner) {
  const std::size_t d2 = pair_.dim();
  const auto& free = pair_.quotient().free_columns();
  SubspaceBuilder rels(d2 * n_);
  for (std::size_t q = 0; q < d2; ++q) {
    std::size_t i = free[q] / n_, j = free[q] % n_;
    for (std::size_t a = 0; a < outer.base.dim(); ++a) {
      SparseVec qa;
      for (const auto& [j2, c] : outer.right[a][j]) sp_axpy(qa, c, pair_.project_basis(i, j2));
      for (std::size_t k = 0; k < n_; ++k) {
        SparseVec v = tensor2(qa, n_, unit_sp(k));
        sp_axpy(v, Scalar(-1), tensor2(unit_sp(q), n_, outer.left[a][k]));
        if (!v.empty()) rels.add(std::move(v));
      }
    }
  }
  q_ = QuotientSpace(d2 * n_, std::move(rels).finish());
}

SparseVec BalancedTriple::project(const SparseVec& x) const {
  SparseVec mid;
  for (const auto& [f, c] : x) {
    std::size_t ij = f / n_, k = f % n_;
    for (const auto& [r, v] : pair_.project_basis(ij / n_, ij % n_)) sp_add(mid, r * n_ + k, c * v);
  }
  return q_.project(mid);
}

// ---------------------------------------------------------------- corings

ACoring trivial_coring(const AlgebraSC& a) {
  ACoring c;
  const std::size_t n = a.dim();
  c.module.base = a;
  c.module.dim = n;
  c.module.left.assign(n, std::vector<SparseVec>(n));
  c.module.right.assign(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < n; ++x) {
      c.module.left[i][x] = a.product(i, x);
      c.module.right[i][x] = a.product(x, i);
    }
  SparseVec u = sparse(a.unit());
  for (std::size_t x = 0; x < n; ++x) c.delta.push_back(tensor2(unit_sp(x), n, u));
  c.counit = Mat::identity(n);
  c.names = a.names();
  return c;
}

Report check_coring(const ACoring& c) {
  Report rep("coring");
  const Bimodule& m = c.module;
  const AlgebraSC& A = m.base;
  const std::size_t n = m.dim, na = A.dim();
  if (c.delta.size() != n || c.counit.rows() != na || c.counit.cols() != n)
    throw DimensionMismatch("coring: comultiplication or counit has the wrong shape");
  Axis ax = basis_axis(n, c.names), aa = basis_axis(na, A.names());
  auto ea = [&](std::size_t i) { return unit_vec(na, i); };
  auto eps = [&](const SparseVec& x) { return c.counit.apply(dense(x, n)); };

  rep.add(check_identity("1▷x=x◁1=x", "the unit of A acts trivially", {ax}, [&](const Instance& t) {
    SparseVec x = unit_sp(t[0]);
    SparseVec l = m.act_left(A.unit(), x), r = m.act_right(x, A.unit());
    return Evaluation{dense(l == x ? r : l, n), dense(x, n)};
  }));
  rep.add(check_identity("(ab)▷x=a▷(b▷x)", "left action is associative", {aa, aa, ax}, [&](const Instance& t) {
    SparseVec x = unit_sp(t[2]);
    return Evaluation{dense(m.act_left(dense(A.product(t[0], t[1]), na), x), n),
                      dense(m.act_left(ea(t[0]), m.left[t[1]][t[2]]), n)};
  }));
  rep.add(check_identity("x◁(ab)=(x◁a)◁b", "right action is associative", {ax, aa, aa}, [&](const Instance& t) {
    SparseVec x = unit_sp(t[0]);
    return Evaluation{dense(m.act_right(x, dense(A.product(t[1], t[2]), na)), n),
                      dense(m.act_right(m.right[t[1]][t[0]], ea(t[2])), n)};
  }));
  rep.add(check_identity("(a▷x)◁b=a▷(x◁b)", "the actions commute", {aa, ax, aa}, [&](const Instance& t) {
    return Evaluation{dense(m.act_right(m.left[t[0]][t[1]], ea(t[2])), n),
                      dense(m.act_left(ea(t[0]), m.right[t[2]][t[1]]), n)};
  }));

  BalancedTriple triple(m, m);
  const BalancedPair& pair = triple.pair();
  const std::size_t d2 = pair.dim();
  auto delta = [&](const SparseVec& x) {
    SparseVec r;
    for (const auto& [k, v] : x) sp_axpy(r, v, c.delta[k]);
    return r;
  };
  rep.add(check_identity("Δ(a▷x)=a▷Δ(x)", "Δ is left A-linear", {aa, ax}, [&](const Instance& t) {
    SparseVec r;
    for_pairs(c.delta[t[1]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      sp_axpy(r, v, tensor2(m.left[t[0]][i], n, unit_sp(j)));
    });
    return Evaluation{dense(pair.project(delta(m.left[t[0]][t[1]])), d2), dense(pair.project(r), d2)};
  }));
  rep.add(check_identity("Δ(x◁a)=Δ(x)◁a", "Δ is right A-linear", {ax, aa}, [&](const Instance& t) {
    SparseVec r;
    for_pairs(c.delta[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      sp_axpy(r, v, tensor2(unit_sp(i), n, m.right[t[1]][j]));
    });
    return Evaluation{dense(pair.project(delta(m.right[t[1]][t[0]])), d2), dense(pair.project(r), d2)};
  }));
  rep.add(check_identity("ε(a▷x)=aε(x)", "ε is left A-linear", {aa, ax}, [&](const Instance& t) {
    return Evaluation{eps(m.left[t[0]][t[1]]), A.multiply(ea(t[0]), c.counit.column(t[1]))};
  }));
  rep.add(check_identity("ε(x◁a)=ε(x)a", "ε is right A-linear", {ax, aa}, [&](const Instance& t) {
    return Evaluation{eps(m.right[t[1]][t[0]]), A.multiply(c.counit.column(t[0]), ea(t[1]))};
  }));
  const std::size_t d3 = triple.dim();
  rep.add(check_identity("coassociativity", "(Δ⊗I)Δ = (I⊗Δ)Δ in M⊗_AM⊗_AM", {ax}, [&](const Instance& t) {
    SparseVec l, r;
    for_pairs(c.delta[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      sp_axpy(l, v, tensor2(c.delta[i], n, unit_sp(j)));
      sp_axpy(r, v, tensor2(unit_sp(i), n * n, c.delta[j]));
    });
    return Evaluation{dense(triple.project(l), d3), dense(triple.project(r), d3)};
  }));
  rep.add(check_identity("counit:ε(x₁)▷x₂=x", "left counit law", {ax}, [&](const Instance& t) {
    SparseVec r;
    for_pairs(c.delta[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      sp_axpy(r, v, m.act_left(c.counit.column(i), unit_sp(j)));
    });
    return Evaluation{dense(r, n), unit_vec(n, t[0])};
  }));
  rep.add(check_identity("counit:x₁◁ε(x₂)=x", "right counit law", {ax}, [&](const Instance& t) {
    SparseVec r;
    for_pairs(c.delta[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      sp_axpy(r, v, m.act_right(unit_sp(i), c.counit.column(j)));
    });
    return Evaluation{dense(r, n), unit_vec(n, t[0])};
  }));
  rep.set_dim("M", n);
  rep.set_dim("M⊗M", d2);
  return rep;
}

// ---------------------------------------------------------------- Hopf algebroids

Bimodule HopfAlgebroid::bimodule(Side side) const {
  Bimodule m;
  m.base = base;
  m.dim = total.dim();
  const std::size_t na = base.dim(), n = m.dim;
  m.left.assign(na, std::vector<SparseVec>(n));
  m.right.assign(na, std::vector<SparseVec>(n));
  auto sl = sparse_columns(side == Side::left ? s_l : t_r);
  auto tl = sparse_columns(side == Side::left ? t_l : s_r);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      if (side == Side::left) {
        m.left[a][x] = total.multiply(sl[a], unit_sp(x));
        m.right[a][x] = total.multiply(tl[a], unit_sp(x));
      } else {
        m.left[a][x] = total.multiply(unit_sp(x), sl[a]);
        m.right[a][x] = total.multiply(unit_sp(x), tl[a]);
      }
    }
  return m;
}

ACoring HopfAlgebroid::coring(Side side) const {
  ACoring c;
  c.module = bimodule(side);
  c.delta = side == Side::left ? delta_l : delta_r;
  c.counit = side == Side::left ? eps_l : eps_r;
  c.names = total.names();
  return c;
}

namespace {

void check_shapes(const HopfAlgebroid& h) {
  const std::size_t n = h.dim(), na = h.base.dim();
  for (const Mat* m : {&h.s_l, &h.t_l, &h.s_r, &h.t_r})
    if (m->rows() != n || m->cols() != na) throw DimensionMismatch("algebroid: source/target shape");
  for (const Mat* m : {&h.eps_l, &h.eps_r})
    if (m->rows() != na || m->cols() != n) throw DimensionMismatch("algebroid: counit shape");
  if (h.delta_l.size() != n || h.delta_r.size() != n)
    throw DimensionMismatch("algebroid: comultiplication shape");
  if (h.antipode && (h.antipode->rows() != n || h.antipode->cols() != n))
    throw DimensionMismatch("algebroid: antipode shape");
}

// The defect of the Takeuchi condition for one base element.
std::pair<SparseVec, SparseVec> takeuchi_sides(const SparseVec& x, const HopfAlgebroid& h, Side side,
                                               const SparseVec& ta, const SparseVec& sa) {
  const std::size_t n = h.dim();
  SparseVec l, r;
  for_pairs(x, n, [&](std::size_t i, std::size_t j, const Scalar& v) {
    if (side == Side::left) {
      sp_axpy(l, v, tensor2(h.total.multiply(unit_sp(i), ta), n, unit_sp(j)));
      sp_axpy(r, v, tensor2(unit_sp(i), n, h.total.multiply(unit_sp(j), sa)));
    } else {
      sp_axpy(l, v, tensor2(h.total.multiply(sa, unit_sp(i)), n, unit_sp(j)));
      sp_axpy(r, v, tensor2(unit_sp(i), n, h.total.multiply(ta, unit_sp(j))));
    }
  });
  return {l, r};
}

Report check_bialgebroid(const HopfAlgebroid& h, Side side) {
  check_shapes(h);
  const bool L = side == Side::left;
  const std::string sfx = L ? "_l" : "_r";
  const std::string S = "s" + sfx, T = "t" + sfx, D = "Δ" + sfx, E = "ε" + sfx;
  Report rep(L ? "left bialgebroid" : "right bialgebroid");
  const AlgebraSC& H = h.total;
  const AlgebraSC& A = h.base;
  const std::size_t n = H.dim(), na = A.dim();
  const Mat& s = L ? h.s_l : h.s_r;
  const Mat& tt = L ? h.t_l : h.t_r;
  const Mat& eps = L ? h.eps_l : h.eps_r;
  const auto& delta = L ? h.delta_l : h.delta_r;
  Axis ax = basis_axis(n, H.names()), aa = basis_axis(na, A.names());

  rep.append(check_algebra(H), "ℋ:");
  rep.append(check_algebra(A), "A:");
  rep.add(check_identity(S + "(ab)=" + S + "(a)" + S + "(b)", "source map is multiplicative", {aa, aa},
                         [&](const Instance& t) {
                           return Evaluation{s.apply(dense(A.product(t[0], t[1]), na)),
                                             H.multiply(s.column(t[0]), s.column(t[1]))};
                         }));
  rep.add_fact(S + "(1)=1", "source map is unital", s.apply(A.unit()) == H.unit());
  rep.add(check_identity(T + "(ab)=" + T + "(b)" + T + "(a)", "target map is anti-multiplicative", {aa, aa},
                         [&](const Instance& t) {
                           return Evaluation{tt.apply(dense(A.product(t[0], t[1]), na)),
                                             H.multiply(tt.column(t[1]), tt.column(t[0]))};
                         }));
  rep.add_fact(T + "(1)=1", "target map is unital", tt.apply(A.unit()) == H.unit());
  rep.add(check_identity(S + "(a)" + T + "(b)=" + T + "(b)" + S + "(a)", "source and target images commute",
                         {aa, aa}, [&](const Instance& t) {
                           return Evaluation{H.multiply(s.column(t[0]), tt.column(t[1])),
                                             H.multiply(tt.column(t[1]), s.column(t[0]))};
                         }));

  ACoring cor = h.coring(side);
  rep.append(check_coring(cor), std::string(L ? "left" : "right") + " coring:");

  BalancedPair pair(cor.module);
  const std::size_t d2 = pair.dim();
  auto ts = sparse_columns(L ? h.t_l : h.t_r);
  auto ss = sparse_columns(L ? h.s_l : h.s_r);
  rep.add(check_identity(D + "(x)∈Takeuchi", "the comultiplication lands in the Takeuchi product", {ax, aa},
                         [&](const Instance& t) {
                           auto [l, r] = takeuchi_sides(delta[t[0]], h, side, ts[t[1]], ss[t[1]]);
                           return Evaluation{dense(pair.project(l), d2), dense(pair.project(r), d2)};
                         }));
  std::vector<const AlgebraSC*> hh{&H, &H};
  rep.add(check_identity(D + "(xy)=" + D + "(x)" + D + "(y)", "the comultiplication is multiplicative",
                         {ax, ax}, [&](const Instance& t) {
                           SparseVec l;
                           for (const auto& [k, v] : H.product(t[0], t[1])) sp_axpy(l, v, delta[k]);
                           SparseVec r = tensor_multiply(hh, delta[t[0]], delta[t[1]]);
                           return Evaluation{dense(pair.project(l), d2), dense(pair.project(r), d2)};
                         }));
  {
    SparseVec l;
    SparseVec u = sparse(H.unit());
    for (const auto& [k, v] : u) sp_axpy(l, v, delta[k]);
    rep.add_fact(D + "(1)=1⊗1", "the comultiplication is unital",
                 pair.project(l) == pair.project(tensor2(u, n, u)));
  }
  auto e_of = [&](const Vec& x) { return eps.apply(x); };
  if (L) {
    rep.add(check_identity(E + "(xy)=" + E + "(x" + S + "(" + E + "(y)))", "counit law via the source map",
                           {ax, ax}, [&](const Instance& t) {
                             Vec x = unit_vec(n, t[0]);
                             return Evaluation{e_of(dense(H.product(t[0], t[1]), n)),
                                               e_of(H.multiply(x, s.apply(eps.column(t[1]))))};
                           }));
    rep.add(check_identity(E + "(xy)=" + E + "(x" + T + "(" + E + "(y)))", "counit law via the target map",
                           {ax, ax}, [&](const Instance& t) {
                             Vec x = unit_vec(n, t[0]);
                             return Evaluation{e_of(dense(H.product(t[0], t[1]), n)),
                                               e_of(H.multiply(x, tt.apply(eps.column(t[1]))))};
                           }));
  } else {
    rep.add(check_identity(E + "(xy)=" + E + "(" + S + "(" + E + "(x))y)", "counit law via the source map",
                           {ax, ax}, [&](const Instance& t) {
                             Vec y = unit_vec(n, t[1]);
                             return Evaluation{e_of(dense(H.product(t[0], t[1]), n)),
                                               e_of(H.multiply(s.apply(eps.column(t[0])), y))};
                           }));
    rep.add(check_identity(E + "(xy)=" + E + "(" + T + "(" + E + "(x))y)", "counit law via the target map",
                           {ax, ax}, [&](const Instance& t) {
                             Vec y = unit_vec(n, t[1]);
                             return Evaluation{e_of(dense(H.product(t[0], t[1]), n)),
                                               e_of(H.multiply(tt.apply(eps.column(t[0])), y))};
                           }));
  }
  rep.add_fact(E + "(1)=1", "the counit is unital", e_of(H.unit()) == A.unit());
  rep.set_dim("total", n);
  rep.set_dim("base", na);
  rep.set_dim(std::string("ℋ⊗ℋ") + (L ? " (left)" : " (right)"), d2);
  rep.set_flag("commutative base", A.is_commutative());
  return rep;
}

}  // namespace

bool takeuchi_membership_rep(const SparseVec& x, const HopfAlgebroid& h, Side side) {
  BalancedPair pair(h.bimodule(side));
  auto ts = sparse_columns(side == Side::left ? h.t_l : h.t_r);
  auto ss = sparse_columns(side == Side::left ? h.s_l : h.s_r);
  for (std::size_t a = 0; a < h.base.dim(); ++a) {
    auto [l, r] = takeuchi_sides(x, h, side, ts[a], ss[a]);
    if (pair.project(l) != pair.project(r)) return false;
  }
  return true;
}

bool takeuchi_membership(const Vec& x, const HopfAlgebroid& h, Side side) {
  BalancedPair pair(h.bimodule(side));
  if (x.size() != pair.dim()) throw DimensionMismatch("takeuchi_membership: wrong coordinate length");
  return takeuchi_membership_rep(pair.quotient().section(sparse(x)), h, side);
}

Report check_left_bialgebroid(const HopfAlgebroid& h) { return check_bialgebroid(h, Side::left); }
Report check_right_bialgebroid(const HopfAlgebroid& h) { return check_bialgebroid(h, Side::right); }

Report check_hopf_algebroid(const HopfAlgebroid& h) {
  Report left = check_left_bialgebroid(h), right = check_right_bialgebroid(h);
  if (!left.passed() || !right.passed()) {
    std::string what = "bialgebroid prerequisites failed:";
    for (const auto& id : left.failed_ids()) what += " left/" + id;
    for (const auto& id : right.failed_ids()) what += " right/" + id;
    throw BialgebroidFailure(what, {left, right});
  }
  Report rep("Hopf algebroid");
  rep.append(left, "left:");
  rep.append(right, "right:");
  const AlgebraSC& H = h.total;
  const AlgebraSC& A = h.base;
  const std::size_t n = H.dim(), na = A.dim();
  Axis ax = basis_axis(n, H.names()), aa = basis_axis(na, A.names());

  struct Compat {
    const char* id;
    const Mat *outer, *eps, *inner;
  };
  const Compat compat[] = {{"(i) s_l∘ε_l∘t_r=t_r", &h.s_l, &h.eps_l, &h.t_r},
                           {"(i) t_l∘ε_l∘s_r=s_r", &h.t_l, &h.eps_l, &h.s_r},
                           {"(i) s_r∘ε_r∘t_l=t_l", &h.s_r, &h.eps_r, &h.t_l},
                           {"(i) t_r∘ε_r∘s_l=s_l", &h.t_r, &h.eps_r, &h.s_l}};
  for (const auto& c : compat)
    rep.add(check_identity(c.id, "source/target/counit compatibility", {aa}, [&](const Instance& t) {
      Vec x = c.inner->column(t[0]);
      return Evaluation{c.outer->apply(c.eps->apply(x)), x};
    }));

  Bimodule bl = h.bimodule(Side::left), br = h.bimodule(Side::right);
  {
    BalancedTriple lr(bl, br);
    const std::size_t d = lr.dim();
    rep.add(check_identity("(ii) (Δ_l⊗I)Δ_r=(I⊗Δ_r)Δ_l", "mixed coassociativity in ℋ⊗^lℋ⊗^rℋ", {ax},
                           [&](const Instance& t) {
                             SparseVec l, r;
                             for_pairs(h.delta_r[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
                               sp_axpy(l, v, tensor2(h.delta_l[i], n, unit_sp(j)));
                             });
                             for_pairs(h.delta_l[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
                               sp_axpy(r, v, tensor2(unit_sp(i), n * n, h.delta_r[j]));
                             });
                             return Evaluation{dense(lr.project(l), d), dense(lr.project(r), d)};
                           }));
  }
  {
    BalancedTriple rl(br, bl);
    const std::size_t d = rl.dim();
    rep.add(check_identity("(ii) (I⊗Δ_l)Δ_r=(Δ_r⊗I)Δ_l", "mixed coassociativity in ℋ⊗^rℋ⊗^lℋ", {ax},
                           [&](const Instance& t) {
                             SparseVec l, r;
                             for_pairs(h.delta_r[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
                               sp_axpy(l, v, tensor2(unit_sp(i), n * n, h.delta_l[j]));
                             });
                             for_pairs(h.delta_l[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
                               sp_axpy(r, v, tensor2(h.delta_r[i], n, unit_sp(j)));
                             });
                             return Evaluation{dense(rl.project(l), d), dense(rl.project(r), d)};
                           }));
  }

  if (!h.antipode) {
    rep.add_fact("antipode", "an antipode is supplied", false);
    return rep;
  }
  const Mat& S = *h.antipode;
  rep.add(check_identity("(iii) 𝒮(t_l(a)xt_r(b))=s_r(b)𝒮(x)s_l(a)", "antipode twists the base actions",
                         {aa, ax, aa}, [&](const Instance& t) {
                           Vec x = unit_vec(n, t[1]);
                           Vec l = S.apply(H.multiply(H.multiply(h.t_l.column(t[0]), x), h.t_r.column(t[2])));
                           Vec r = H.multiply(H.multiply(h.s_r.column(t[2]), S.column(t[1])), h.s_l.column(t[0]));
                           return Evaluation{l, r};
                         }));
  rep.add(check_identity("(iv) μ(𝒮⊗I)Δ_l=s_rε_r", "left antipode law", {ax}, [&](const Instance& t) {
    Vec l(n);
    for_pairs(h.delta_l[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      axpy(l, v, H.multiply(S.column(i), unit_vec(n, j)));
    });
    return Evaluation{l, h.s_r.apply(h.eps_r.column(t[0]))};
  }));
  rep.add(check_identity("(iv) μ(I⊗𝒮)Δ_r=s_lε_l", "right antipode law", {ax}, [&](const Instance& t) {
    Vec l(n);
    for_pairs(h.delta_r[t[0]], n, [&](std::size_t i, std::size_t j, const Scalar& v) {
      axpy(l, v, H.multiply(unit_vec(n, i), S.column(j)));
    });
    return Evaluation{l, h.s_l.apply(h.eps_l.column(t[0]))};
  }));
  rep.add(check_identity("𝒮(xy)=𝒮(y)𝒮(x)", "antipode is anti-multiplicative", {ax, ax}, [&](const Instance& t) {
    return Evaluation{S.apply(dense(H.product(t[0], t[1]), n)), H.multiply(S.column(t[1]), S.column(t[0]))};
  }));
  rep.add_fact("𝒮(1)=1", "antipode is unital", S.apply(H.unit()) == H.unit());
  return rep;
}

// ---------------------------------------------------------------- skew pairings

Vec SkewPairing::eval(const Vec& xi, const Vec& ell) const {
  const std::size_t nl = l.dim();
  Vec r(form.rows());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i].is_zero()) continue;
    for (std::size_t j = 0; j < ell.size(); ++j) {
      if (ell[j].is_zero()) continue;
      Scalar c = xi[i] * ell[j];
      for (std::size_t a = 0; a < form.rows(); ++a) {
        const Scalar& f = form(a, i * nl + j);
        if (!f.is_zero()) r[a] += c * f;
      }
    }
  }
  return r;
}

Report check_skew_pairing(const SkewPairing& sp) {
  const HopfAlgebroid& Lm = sp.lambda;
  const HopfAlgebroid& L = sp.l;
  if (!(Lm.base == L.base)) throw DimensionMismatch("skew pairing: the bialgebroids have different bases");
  const std::size_t na = L.base.dim(), nx = Lm.dim(), nl = L.dim();
  if (sp.form.rows() != na || sp.form.cols() != nx * nl) throw DimensionMismatch("skew pairing form shape");
  Report a1 = check_left_bialgebroid(Lm), a2 = check_left_bialgebroid(L);
  if (!a1.passed() || !a2.passed()) throw BialgebroidFailure("skew pairing: a bialgebroid fails its axioms", {a1, a2});

  Report rep("skew pairing");
  const AlgebraSC& A = L.base;
  const AlgebraSC& X = Lm.total;
  const AlgebraSC& Y = L.total;
  Axis aa = basis_axis(na, A.names()), xa = basis_axis(nx, X.names()), la = basis_axis(nl, Y.names());
  auto G = [&](const Vec& xi, const Vec& ell) { return sp.eval(xi, ell); };
  auto ex = [&](std::size_t i) { return unit_vec(nx, i); };
  auto el = [&](std::size_t i) { return unit_vec(nl, i); };

  rep.add(check_identity("SP1", "⟨⟨s(a)t(b)ξs(c)t(d)|ℓ⟩⟩e = a⟨⟨ξ|s(c)t(e)ℓs(d)t(b)⟩⟩",
                         {aa, aa, aa, aa, aa, xa, la}, [&](const Instance& t) {
                           Vec xi = X.multiply(X.multiply(Lm.s_l.column(t[0]), Lm.t_l.column(t[1])), ex(t[5]));
                           xi = X.multiply(X.multiply(xi, Lm.s_l.column(t[2])), Lm.t_l.column(t[3]));
                           Vec lhs = A.multiply(G(xi, el(t[6])), unit_vec(na, t[4]));
                           Vec ell = Y.multiply(Y.multiply(L.s_l.column(t[2]), L.t_l.column(t[4])), el(t[6]));
                           ell = Y.multiply(Y.multiply(ell, L.s_l.column(t[3])), L.t_l.column(t[1]));
                           Vec rhs = A.multiply(unit_vec(na, t[0]), G(ex(t[5]), ell));
                           return Evaluation{lhs, rhs};
                         }));
  rep.add(check_identity("SP2", "⟨⟨ξ|ℓm⟩⟩ = ⟨⟨ξ₁|ℓt(⟨⟨ξ₂|m⟩⟩)⟩⟩", {xa, la, la}, [&](const Instance& t) {
    Vec lhs = G(ex(t[0]), dense(Y.product(t[1], t[2]), nl));
    Vec rhs(na);
    for_pairs(Lm.delta_l[t[0]], nx, [&](std::size_t i, std::size_t j, const Scalar& v) {
      Vec inner = G(ex(j), el(t[2]));
      axpy(rhs, v, G(ex(i), Y.multiply(el(t[1]), L.t_l.apply(inner))));
    });
    return Evaluation{lhs, rhs};
  }));
  rep.add(check_identity("SP3", "⟨⟨ξζ|ℓ⟩⟩ = ⟨⟨ξs(⟨⟨ζ|ℓ₁⟩⟩)|ℓ₂⟩⟩", {xa, xa, la}, [&](const Instance& t) {
    Vec lhs = G(dense(X.product(t[0], t[1]), nx), el(t[2]));
    Vec rhs(na);
    for_pairs(L.delta_l[t[2]], nl, [&](std::size_t i, std::size_t j, const Scalar& v) {
      Vec inner = G(ex(t[1]), el(i));
      axpy(rhs, v, G(X.multiply(ex(t[0]), Lm.s_l.apply(inner)), el(j)));
    });
    return Evaluation{lhs, rhs};
  }));
  rep.add(check_identity("SP4", "⟨⟨ξ|1⟩⟩ = ε(ξ)", {xa}, [&](const Instance& t) {
    return Evaluation{G(ex(t[0]), Y.unit()), Lm.eps_l.column(t[0])};
  }));
  rep.add(check_identity("SP5", "⟨⟨1|ℓ⟩⟩ = ε(ℓ)", {la}, [&](const Instance& t) {
    return Evaluation{G(X.unit(), el(t[0])), L.eps_l.column(t[0])};
  }));
  return rep;
}

}  // namespace phopf
