#include "phopf/structures.hpp"

#include "phopf/errors.hpp"

namespace phopf {

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

namespace {

void check_indices(const SparseVec& v, std::size_t bound, const char* what) {
  if (!v.empty() && v.rbegin()->first >= bound)
    throw DimensionMismatch(std::string(what) + ": index out of range");
}

Vec scalar_vec(const Scalar& s) { return Vec{s}; }

}  // namespace

// ---------------------------------------------------------------- AlgebraSC

AlgebraSC::AlgebraSC(std::size_t dim, std::vector<SparseVec> products, Vec unit,
                     std::vector<std::string> names)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)), names_(std::move(names)) {
  if (products_.size() != dim_ * dim_) throw DimensionMismatch("algebra: need dim² products");
  if (unit_.size() != dim_) throw DimensionMismatch("algebra: unit has wrong length");
  for (const auto& p : products_) check_indices(p, dim_, "algebra product");
  if (names_.empty()) names_ = default_names(dim_);
  if (names_.size() != dim_) throw DimensionMismatch("algebra: name list has wrong length");
}

Vec AlgebraSC::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("algebra multiply");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : product(i, j)) r[k] += c * v;
    }
  }
  return r;
}

SparseVec AlgebraSC::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) sp_axpy(r, a * b, product(i, j));
  return r;
}

Mat AlgebraSC::left_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(x, unit_vec(dim_, j)));
  return Mat::from_columns(dim_, cols);
}

Mat AlgebraSC::right_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(unit_vec(dim_, j), x));
  return Mat::from_columns(dim_, cols);
}

bool AlgebraSC::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

AlgebraSC AlgebraSC::opposite() const {
  std::vector<SparseVec> p(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) p[i * dim_ + j] = product(j, i);
  return AlgebraSC(dim_, std::move(p), unit_, names_);
}

AlgebraSC AlgebraSC::renamed(std::vector<std::string> names) const {
  return AlgebraSC(dim_, products_, unit_, std::move(names));
}

// ---------------------------------------------------------------- CoalgebraSC

CoalgebraSC::CoalgebraSC(std::size_t dim, std::vector<SparseVec> coproducts, Vec counit,
                         std::vector<std::string> names)
    : dim_(dim), coproducts_(std::move(coproducts)), counit_(std::move(counit)), names_(std::move(names)) {
  if (coproducts_.size() != dim_) throw DimensionMismatch("coalgebra: need dim coproducts");
  if (counit_.size() != dim_) throw DimensionMismatch("coalgebra: counit has wrong length");
  for (const auto& p : coproducts_) check_indices(p, dim_ * dim_, "coproduct");
  if (names_.empty()) names_ = default_names(dim_);
  if (names_.size() != dim_) throw DimensionMismatch("coalgebra: name list has wrong length");
}

SparseVec CoalgebraSC::comultiply(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("comultiply");
  return comultiply(sparse(x));
}

SparseVec CoalgebraSC::comultiply(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [i, a] : x) sp_axpy(r, a, coproducts_.at(i));
  return r;
}

Scalar CoalgebraSC::counit_of(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("counit");
  Scalar s;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) s += x[i] * counit_[i];
  return s;
}

static SparseVec flip(const SparseVec& t, std::size_t n) {
  SparseVec r;
  for (const auto& [k, c] : t) r.emplace((k % n) * n + k / n, c);
  return r;
}

bool CoalgebraSC::is_cocommutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (flip(coproducts_[i], dim_) != coproducts_[i]) return false;
  return true;
}

CoalgebraSC CoalgebraSC::co_opposite() const {
  std::vector<SparseVec> d;
  for (const auto& c : coproducts_) d.push_back(flip(c, dim_));
  return CoalgebraSC(dim_, std::move(d), counit_, names_);
}

// ---------------------------------------------------------------- HopfPackage

HopfPackage::HopfPackage(AlgebraSC a, CoalgebraSC c, std::optional<Mat> s)
    : algebra(std::move(a)), coalgebra(std::move(c)), antipode(std::move(s)) {
  if (algebra.dim() != coalgebra.dim()) throw DimensionMismatch("package: algebra and coalgebra dims differ");
  if (antipode && (antipode->rows() != dim() || antipode->cols() != dim()))
    throw DimensionMismatch("package: antipode has wrong shape");
}

const Mat& HopfPackage::S() const {
  if (!antipode) throw PreconditionFailure("Hopf algebra has an antipode");
  return *antipode;
}

// ---------------------------------------------------------------- tensors

std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

std::size_t join_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
  return f;
}

SparseVec tensor_multiply(const std::vector<const AlgebraSC*>& factors, const SparseVec& x,
                          const SparseVec& y) {
  std::vector<std::size_t> dims;
  for (auto* f : factors) dims.push_back(f->dim());
  SparseVec r;
  for (const auto& [i, a] : x) {
    auto ii = split_index(i, dims);
    for (const auto& [j, b] : y) {
      auto jj = split_index(j, dims);
      SparseVec acc{{0, a * b}};
      for (std::size_t k = 0; k < dims.size() && !acc.empty(); ++k)
        acc = sp_kron(acc, dims[k], factors[k]->product(ii[k], jj[k]));
      for (const auto& [t, c] : acc) sp_add(r, t, c);
    }
  }
  return r;
}

// ---------------------------------------------------------------- checks

Report check_algebra(const AlgebraSC& a, const std::string& prefix) {
  Report rep("algebra");
  const std::size_t n = a.dim();
  Axis ax = basis_axis(n, a.names());
  rep.add(check_identity(prefix + "associativity", "(xy)z = x(yz)", {ax, ax, ax}, [&](const Instance& t) {
    SparseVec ex{{t[0], 1}}, ey{{t[1], 1}}, ez{{t[2], 1}};
    return Evaluation{dense(a.multiply(a.multiply(ex, ey), ez), n),
                      dense(a.multiply(ex, a.multiply(ey, ez)), n)};
  }));
  rep.add(check_identity(prefix + "unit", "1x = x = x1", {ax}, [&](const Instance& t) {
    Vec x = unit_vec(n, t[0]);
    Vec l = a.multiply(a.unit(), x), r = a.multiply(x, a.unit());
    return Evaluation{l == x ? r : l, x};
  }));
  rep.set_flag("commutative", a.is_commutative());
  return rep;
}

Report check_coalgebra(const CoalgebraSC& c, const std::string& prefix) {
  Report rep("coalgebra");
  const std::size_t n = c.dim();
  Axis ax = basis_axis(n, c.names());
  rep.add(check_identity(prefix + "coassociativity", "(Δ⊗I)Δ = (I⊗Δ)Δ", {ax}, [&](const Instance& t) {
    SparseVec l, r;
    for (const auto& [k, v] : c.coproduct(t[0])) {
      std::size_t i = k / n, j = k % n;
      for (const auto& [k2, w] : c.coproduct(i)) sp_add(l, k2 * n + j, v * w);
      for (const auto& [k2, w] : c.coproduct(j)) sp_add(r, i * n * n + k2, v * w);
    }
    return Evaluation{dense(l, n * n * n), dense(r, n * n * n)};
  }));
  rep.add(check_identity(prefix + "counit", "(ε⊗I)Δ = I = (I⊗ε)Δ", {ax}, [&](const Instance& t) {
    Vec l(n), r(n);
    for (const auto& [k, v] : c.coproduct(t[0])) {
      std::size_t i = k / n, j = k % n;
      l[j] += v * c.counit()[i];
      r[i] += v * c.counit()[j];
    }
    Vec x = unit_vec(n, t[0]);
    return Evaluation{l == x ? r : l, x};
  }));
  rep.set_flag("cocommutative", c.is_cocommutative());
  return rep;
}

Report check_package(const HopfPackage& p, PackageLevel level) {
  Report rep("package");
  const std::size_t n = p.dim();
  const AlgebraSC& a = p.algebra;
  const CoalgebraSC& c = p.coalgebra;
  Axis ax = basis_axis(n, p.names());
  if (level != PackageLevel::coalgebra) rep.append(check_algebra(a), "");
  if (level != PackageLevel::algebra) rep.append(check_coalgebra(c), "");
  if (level == PackageLevel::bialgebra || level == PackageLevel::hopf) {
    rep.add(check_identity("Δ(xy)=Δ(x)Δ(y)", "comultiplication is multiplicative", {ax, ax},
                           [&](const Instance& t) {
                             SparseVec xy = a.product(t[0], t[1]);
                             SparseVec l = c.comultiply(xy);
                             SparseVec r = tensor_multiply({&a, &a}, c.coproduct(t[0]), c.coproduct(t[1]));
                             return Evaluation{dense(l, n * n), dense(r, n * n)};
                           }));
    rep.add_fact("Δ(1)=1⊗1", "comultiplication is unital",
                 c.comultiply(a.unit()) == sparse(kron(a.unit(), a.unit())));
    rep.add(check_identity("ε(xy)=ε(x)ε(y)", "counit is multiplicative", {ax, ax}, [&](const Instance& t) {
      Scalar l = c.counit_of(dense(a.product(t[0], t[1]), n));
      return Evaluation{scalar_vec(l), scalar_vec(c.counit()[t[0]] * c.counit()[t[1]])};
    }));
    rep.add_fact("ε(1)=1", "counit is unital", c.counit_of(a.unit()) == Scalar(1));
  }
  if (level == PackageLevel::hopf) {
    if (!p.antipode) {
      rep.add_fact("antipode", "an antipode is supplied", false);
    } else {
      const Mat& S = *p.antipode;
      Mat id = Mat::identity(n);
      Mat ee = unit_counit(c, a);
      Mat l = convolution(S, id, c, a), r = convolution(id, S, c, a);
      rep.add(check_identity("S*id=ηε", "S(x₁)x₂ = ε(x)1", {ax}, [&](const Instance& t) {
        return Evaluation{l.column(t[0]), ee.column(t[0])};
      }));
      rep.add(check_identity("id*S=ηε", "x₁S(x₂) = ε(x)1", {ax}, [&](const Instance& t) {
        return Evaluation{r.column(t[0]), ee.column(t[0])};
      }));
    }
  }
  rep.set_flag("commutative", a.is_commutative());
  rep.set_flag("cocommutative", c.is_cocommutative());
  rep.set_dim("dim", n);
  return rep;
}

// ---------------------------------------------------------------- constructors

HopfPackage group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<SparseVec> prod(n * n), cop(n);
  std::vector<std::string> names;
  Mat S(n, n);
  Vec eps(n, Scalar(1));
  for (std::size_t u = 0; u < n; ++u) {
    names.push_back("δ_" + g.name(u));
    for (std::size_t v = 0; v < n; ++v) prod[u * n + v] = SparseVec{{g.mul(u, v), 1}};
    cop[u] = SparseVec{{u * n + u, 1}};
    S(g.inv(u), u) = 1;
  }
  AlgebraSC a(n, std::move(prod), unit_vec(n, g.unit()), names);
  CoalgebraSC c(n, std::move(cop), std::move(eps), names);
  return HopfPackage(std::move(a), std::move(c), std::move(S));
}

HopfPackage dual_group_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<SparseVec> prod(n * n), cop(n);
  std::vector<std::string> names;
  Mat S(n, n);
  Vec eps(n), one(n, Scalar(1));
  for (std::size_t u = 0; u < n; ++u) {
    names.push_back("p_" + g.name(u));
    prod[u * n + u] = SparseVec{{u, 1}};
    S(g.inv(u), u) = 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) cop[g.mul(v, w)][v * n + w] = 1;
  eps[g.unit()] = 1;
  AlgebraSC a(n, std::move(prod), std::move(one), names);
  CoalgebraSC c(n, std::move(cop), std::move(eps), names);
  return HopfPackage(std::move(a), std::move(c), std::move(S));
}

AlgebraSC function_algebra(std::size_t n, std::vector<std::string> names) {
  if (n == 0) throw DimensionMismatch("function algebra on the empty set");
  std::vector<SparseVec> prod(n * n);
  for (std::size_t x = 0; x < n; ++x) prod[x * n + x] = SparseVec{{x, 1}};
  if (names.empty())
    for (std::size_t x = 0; x < n; ++x) names.push_back("χ" + std::to_string(x + 1));
  return AlgebraSC(n, std::move(prod), Vec(n, Scalar(1)), std::move(names));
}

AlgebraSC matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  std::vector<SparseVec> prod(d * d);
  std::vector<std::string> names;
  Vec unit(d);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) prod[(i * n + j) * d + (j * n + l)] = SparseVec{{i * n + l, 1}};
    }
  }
  return AlgebraSC(d, std::move(prod), std::move(unit), std::move(names));
}

CoalgebraSC grouplike_coalgebra(std::size_t n, std::vector<std::string> names) {
  std::vector<SparseVec> cop(n);
  for (std::size_t x = 0; x < n; ++x) cop[x] = SparseVec{{x * n + x, 1}};
  if (names.empty())
    for (std::size_t x = 0; x < n; ++x) names.push_back("x" + std::to_string(x + 1));
  return CoalgebraSC(n, std::move(cop), Vec(n, Scalar(1)), std::move(names));
}

CoalgebraSC dual_coalgebra(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVec> cop(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j)) cop[k][i * n + j] = c;
  std::vector<std::string> names;
  for (const auto& s : a.names()) names.push_back(s + "*");
  return CoalgebraSC(n, std::move(cop), a.unit(), std::move(names));
}

AlgebraSC dual_algebra(const CoalgebraSC& c) {
  const std::size_t n = c.dim();
  std::vector<SparseVec> prod(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ij, v] : c.coproduct(k)) prod[ij][k] = v;
  std::vector<std::string> names;
  for (const auto& s : c.names()) names.push_back(s + "*");
  return AlgebraSC(n, std::move(prod), c.counit(), std::move(names));
}

Mat canonical_group_pairing(const FiniteGroup& g) { return Mat::identity(g.order()); }

// ---------------------------------------------------------------- convolution

Mat convolution(const Mat& f, const Mat& g, const CoalgebraSC& c, const AlgebraSC& a) {
  if (f.rows() != a.dim() || g.rows() != a.dim() || f.cols() != c.dim() || g.cols() != c.dim())
    throw DimensionMismatch("convolution: maps must be C → A");
  const std::size_t n = c.dim();
  std::vector<Vec> cols;
  for (std::size_t x = 0; x < n; ++x) {
    Vec r(a.dim());
    for (const auto& [k, v] : c.coproduct(x)) axpy(r, v, a.multiply(f.column(k / n), g.column(k % n)));
    cols.push_back(std::move(r));
  }
  return Mat::from_columns(a.dim(), cols);
}

Mat unit_counit(const CoalgebraSC& c, const AlgebraSC& a) {
  std::vector<Vec> cols;
  for (std::size_t x = 0; x < c.dim(); ++x) cols.push_back(c.counit()[x] * a.unit());
  return Mat::from_columns(a.dim(), cols);
}

std::optional<Mat> solve_antipode(const AlgebraSC& a, const CoalgebraSC& c) {
  const std::size_t n = a.dim();
  if (c.dim() != n) throw DimensionMismatch("solve_antipode");
  // Unknown S(r, i) at position r*n+i; two equation blocks (S*id and id*S), n×n each.
  Mat sys(2 * n * n, n * n);
  Vec rhs(2 * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < n; ++t) {
      rhs[x * n + t] = c.counit()[x] * a.unit()[t];
      rhs[n * n + x * n + t] = rhs[x * n + t];
    }
    for (const auto& [k, v] : c.coproduct(x)) {
      std::size_t i = k / n, j = k % n;
      for (std::size_t r = 0; r < n; ++r) {
        for (const auto& [t, w] : a.product(r, j)) sys(x * n + t, r * n + i) += v * w;
        for (const auto& [t, w] : a.product(i, r)) sys(n * n + x * n + t, r * n + j) += v * w;
      }
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Mat S(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) S(r, i) = (*sol)[r * n + i];
  return S;
}

// ---------------------------------------------------------------- pairings

bool is_nondegenerate(const Mat& form) {
  return form.rows() == form.cols() && form.rank() == form.rows();
}

namespace {

void add_alg_coalg_laws(Report& rep, const Mat& form, const AlgebraSC& a, const CoalgebraSC& c,
                        const std::string& prefix) {
  const std::size_t n = c.dim();
  Axis aa = basis_axis(a.dim(), a.names()), cc = basis_axis(n, c.names());
  rep.add(check_identity(prefix + "⟨ab,c⟩=⟨a,c₁⟩⟨b,c₂⟩", "pairing is multiplicative", {aa, aa, cc},
                         [&](const Instance& t) {
                           Scalar l, r;
                           for (const auto& [k, v] : a.product(t[0], t[1])) l += v * form(k, t[2]);
                           for (const auto& [k, v] : c.coproduct(t[2]))
                             r += v * form(t[0], k / n) * form(t[1], k % n);
                           return Evaluation{scalar_vec(l), scalar_vec(r)};
                         }));
  rep.add(check_identity(prefix + "⟨1,c⟩=ε(c)", "pairing is unital", {cc}, [&](const Instance& t) {
    Scalar l;
    for (std::size_t k = 0; k < a.dim(); ++k) l += a.unit()[k] * form(k, t[0]);
    return Evaluation{scalar_vec(l), scalar_vec(c.counit()[t[0]])};
  }));
}

}  // namespace

Report check_pairing(const Mat& form, const AlgebraSC& a, const CoalgebraSC& c, bool nondegenerate) {
  if (form.rows() != a.dim() || form.cols() != c.dim()) throw DimensionMismatch("pairing form shape");
  Report rep("pairing");
  add_alg_coalg_laws(rep, form, a, c, "");
  if (nondegenerate) rep.add_fact("nondegenerate", "rank(form) = both dimensions", is_nondegenerate(form));
  return rep;
}

Report check_pairing(const Mat& form, const HopfPackage& h, const HopfPackage& k, PairingKind kind,
                     bool nondegenerate) {
  if (form.rows() != h.dim() || form.cols() != k.dim()) throw DimensionMismatch("pairing form shape");
  Report rep("pairing");
  add_alg_coalg_laws(rep, form, h.algebra, k.coalgebra, "");
  if (kind != PairingKind::alg_coalg) {
    Mat ft = form.transpose();
    add_alg_coalg_laws(rep, ft, k.algebra, h.coalgebra, "mirror:");
  }
  if (kind == PairingKind::hopf) {
    Axis hh = basis_axis(h.dim(), h.names()), kk = basis_axis(k.dim(), k.names());
    if (!h.antipode || !k.antipode) {
      rep.add_fact("⟨h,S(ξ)⟩=⟨S(h),ξ⟩", "both antipodes supplied", false);
    } else {
      Mat l = form * k.S(), r = h.S().transpose() * form;
      rep.add(check_identity("⟨h,S(ξ)⟩=⟨S(h),ξ⟩", "pairing respects the antipodes", {hh, kk},
                             [&](const Instance& t) {
                               return Evaluation{scalar_vec(l(t[0], t[1])), scalar_vec(r(t[0], t[1]))};
                             }));
    }
  }
  if (nondegenerate) rep.add_fact("nondegenerate", "rank(form) = both dimensions", is_nondegenerate(form));
  return rep;
}

// ---------------------------------------------------------------- partial representations

Report check_partial_representation(const Mat& pi, const HopfPackage& h, const AlgebraSC& b) {
  const std::size_t n = h.dim();
  if (pi.rows() != b.dim() || pi.cols() != n) throw DimensionMismatch("partial representation shape");
  Report rep("partial representation");
  const Mat& S = h.S();
  const AlgebraSC& H = h.algebra;
  const CoalgebraSC& C = h.coalgebra;
  Axis ax = basis_axis(n, h.names());
  auto P = [&](const Vec& x) { return pi.apply(x); };
  auto e = [&](std::size_t i) { return unit_vec(n, i); };
  auto Se = [&](std::size_t i) { return S.column(i); };
  auto m = [&](const Vec& x, const Vec& y) { return b.multiply(x, y); };
  auto hm = [&](const Vec& x, const Vec& y) { return H.multiply(x, y); };

  rep.add_fact("PR1", "π(1_H) = 1_B", P(H.unit()) == b.unit());
  rep.add(check_identity("PR2", "π(h)π(k₁)π(S(k₂)) = π(hk₁)π(S(k₂))", {ax, ax}, [&](const Instance& t) {
    Vec l(b.dim()), r(b.dim());
    for (const auto& [q, v] : C.coproduct(t[1])) {
      std::size_t i = q / n, j = q % n;
      axpy(l, v, m(m(P(e(t[0])), P(e(i))), P(Se(j))));
      axpy(r, v, m(P(hm(e(t[0]), e(i))), P(Se(j))));
    }
    return Evaluation{l, r};
  }));
  rep.add(check_identity("PR3", "π(h₁)π(S(h₂))π(k) = π(h₁)π(S(h₂)k)", {ax, ax}, [&](const Instance& t) {
    Vec l(b.dim()), r(b.dim());
    for (const auto& [q, v] : C.coproduct(t[0])) {
      std::size_t i = q / n, j = q % n;
      axpy(l, v, m(m(P(e(i)), P(Se(j))), P(e(t[1]))));
      axpy(r, v, m(P(e(i)), P(hm(Se(j), e(t[1])))));
    }
    return Evaluation{l, r};
  }));
  rep.add(check_identity("PR4", "π(h)π(S(k₁))π(k₂) = π(hS(k₁))π(k₂)", {ax, ax}, [&](const Instance& t) {
    Vec l(b.dim()), r(b.dim());
    for (const auto& [q, v] : C.coproduct(t[1])) {
      std::size_t i = q / n, j = q % n;
      axpy(l, v, m(m(P(e(t[0])), P(Se(i))), P(e(j))));
      axpy(r, v, m(P(hm(e(t[0]), Se(i))), P(e(j))));
    }
    return Evaluation{l, r};
  }));
  rep.add(check_identity("PR5", "π(S(h₁))π(h₂)π(k) = π(S(h₁))π(h₂k)", {ax, ax}, [&](const Instance& t) {
    Vec l(b.dim()), r(b.dim());
    for (const auto& [q, v] : C.coproduct(t[0])) {
      std::size_t i = q / n, j = q % n;
      axpy(l, v, m(m(P(Se(i)), P(e(j))), P(e(t[1]))));
      axpy(r, v, m(P(Se(i)), P(hm(e(j), e(t[1])))));
    }
    return Evaluation{l, r};
  }));
  return rep;
}

// ---------------------------------------------------------------- op / cop

HopfPackage op_cop_transformers(const HopfPackage& p, Transform which) {
  AlgebraSC a = which == Transform::cop ? p.algebra : p.algebra.opposite();
  CoalgebraSC c = which == Transform::op ? p.coalgebra : p.coalgebra.co_opposite();
  std::optional<Mat> S;
  if (p.antipode) S = which == Transform::op_cop ? p.antipode : inverse(*p.antipode);
  return HopfPackage(std::move(a), std::move(c), std::move(S));
}

}  // namespace phopf

namespace phopf {

std::string vector_label(const SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    std::string coef = c.str();
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef = coef.substr(1);
    if (neg)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (coef != "1") out += coef.find('/') != std::string::npos ? "(" + coef + ")" : coef;
    out += i < names.size() ? names[i] : "e" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> basis_labels(const Subspace& s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& row : s.rows()) out.push_back(vector_label(from_row(row), names));
  return out;
}

Vec coordinates_in(const Subspace& s, const SparseVec& v, const char* what) {
  auto c = s.coordinates(v);
  if (!c) throw WellDefinednessFailure(std::string(what) + ": value leaves the carrier");
  return *c;
}

AlgebraSC subalgebra(const AlgebraSC& a, const Subspace& s, const Vec& unit) {
  const std::size_t d = s.dim();
  std::vector<SparseVec> basis;
  for (const auto& row : s.rows()) basis.push_back(from_row(row));
  std::vector<SparseVec> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      prod[i * d + j] = sparse(coordinates_in(s, a.multiply(basis[i], basis[j]), "subalgebra product"));
  Vec u = coordinates_in(s, sparse(unit), "subalgebra unit");
  return AlgebraSC(d, std::move(prod), std::move(u), basis_labels(s, a.names()));
}

}  // namespace phopf
