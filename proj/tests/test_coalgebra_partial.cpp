#include <doctest.h>

#include "fixtures.hpp"
#include "phopf/coalgebra_partial.hpp"
#include "phopf/partial_coactions.hpp"

using namespace phopf;

namespace {

// kℤ₂ swapping grouplikes; `swap` lists the permutation of δ_g.
PartialModuleCoalgebra grouplike_swap(std::size_t n, const std::vector<std::size_t>& swap) {
  Mat act(n, 2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    act(x, x) = 1;
    act(swap[x], n + x) = 1;
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return PartialModuleCoalgebra(fx::kz2(), grouplike_coalgebra(n, names), act);
}

// (kℤ₂)* coacting on grouplikes y₁,y₂,y₃: λ(y) = p_e⊗y + p_g⊗g·y with g swapping y₂, y₃.
PartialComoduleCoalgebra y_comodule() {
  const std::size_t perm[] = {0, 2, 1};
  Mat lam(6, 3);
  for (std::size_t y = 0; y < 3; ++y) {
    lam(y, y) = 1;
    lam(3 + perm[y], y) = 1;
  }
  return PartialComoduleCoalgebra(fx::kz2_dual(), grouplike_coalgebra(3, {"y1", "y2", "y3"}), lam);
}

Mat diag(std::initializer_list<long long> xs) {
  Mat m(xs.size(), xs.size());
  std::size_t i = 0;
  for (auto x : xs) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

CoalgebraGroupAction e3_group() {
  return CoalgebraGroupAction{fx::z2(), fx::c2(), {diag({1, 1}), diag({1, 0})}, {diag({1, 1}), diag({1, 0})}};
}

}  // namespace

TEST_CASE("E3 is a symmetric partial module coalgebra") {
  auto r = check_partial_module_coalgebra(fx::e3());
  CHECK(r.passed());
  CHECK(r.flag("symmetric"));
  CHECK_FALSE(r.flag("global"));
  CHECK_FALSE(is_global(fx::e3()));
  // ε(δ_g·x₂) = 0 ≠ ε(δ_g)ε(x₂)
  CHECK(r.find("ε(h·c)=ε(h₁·c₁)ε(h₂·c₂)")->verdict == Verdict::pass);

  auto sw = grouplike_swap(2, {1, 0});
  CHECK(check_partial_module_coalgebra(sw).passed());
  CHECK(is_global(sw));

  // Δx₂ := x₂⊗x₁ breaks the counit of C before any action axiom is considered.
  auto c = fx::c2();
  CoalgebraSC bad(2, {c.coproduct(0), SparseVec{{1 * 2 + 0, Scalar(1)}}}, c.counit(), c.names());
  auto br = check_partial_module_coalgebra(PartialModuleCoalgebra(fx::kz2(), bad, fx::e3().act));
  CHECK_FALSE(br.passed());
  CHECK(br.find("C:counit")->verdict == Verdict::fail);

  Mat m(2, 4);
  m(1, 2) = 1;  // δ_g·x₁ = x₂, δ_g·x₂ = 0
  m(0, 0) = 1;
  m(1, 1) = 1;
  auto nr = check_partial_module_coalgebra(PartialModuleCoalgebra(fx::kz2(), fx::c2(), m));
  CHECK(nr.find("PLHMC3")->verdict == Verdict::fail);
}

TEST_CASE("coalgebra projections") {
  auto c = fx::c2();
  CHECK(check_coalgebra_projection(Mat::identity(2), c).passed());
  CHECK(check_coalgebra_projection(diag({1, 0}), c).passed());
  Mat avg(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) avg(i, j) = Scalar(1, 2);
  auto r = check_coalgebra_projection(avg, c);
  CHECK(r.find("P²=P")->verdict == Verdict::pass);
  CHECK(r.find("ΔP=(P⊗P)Δ")->verdict == Verdict::fail);
}

TEST_CASE("partial group actions on coalgebras") {
  auto ga = e3_group();
  CHECK(check_group_action_on_coalgebra(ga).passed());

  auto neg = ga;
  neg.theta[1] = diag({-1, 0});
  auto r = check_group_action_on_coalgebra(neg);
  CHECK(r.find("(i) εθ_g=ε")->verdict == Verdict::fail);
  CHECK(r.find("(i) εθ_g=ε")->has_witness({1, 0}));

  auto global = CoalgebraGroupAction{fx::z2(), fx::c2(), {diag({1, 1}), diag({1, 1})}, {diag({1, 1}), diag({1, 1})}};
  CHECK(check_group_action_on_coalgebra(global).passed());
}

TEST_CASE("group data and kG module coalgebras correspond") {
  auto pm = group_to_kG(e3_group());
  CHECK(pm.act == fx::e3().act);
  CHECK(kG_to_group(fx::e3(), fx::z2()) == e3_group());

  auto z3 = fx::z3_module_coalgebra();
  CHECK(check_partial_module_coalgebra(z3).passed());
  auto g3 = kG_to_group(z3, FiniteGroup::cyclic(3));
  CHECK(check_group_action_on_coalgebra(g3).passed());
  CHECK(group_to_kG(g3).act == z3.act);

  auto triv = PartialModuleCoalgebra(group_algebra(FiniteGroup::trivial()), fx::c2(), Mat::identity(2));
  auto tg = kG_to_group(triv, FiniteGroup::trivial());
  CHECK(tg.p[0] == Mat::identity(2));
  CHECK(group_to_kG(tg).act == Mat::identity(2));
}

TEST_CASE("induced module coalgebras") {
  auto global = grouplike_swap(3, {0, 2, 1});
  auto ind = induced_module_coalgebra(global, diag({1, 1, 0}));
  auto r = check_partial_module_coalgebra(ind);
  CHECK(r.passed());
  CHECK(r.flag("symmetric"));
  CHECK_FALSE(r.flag("global"));
  // δ_g·y₁ = y₁, δ_g·y₂ = 0: this is E3.
  CHECK(ind.act == fx::e3().act);

  auto same = induced_module_coalgebra(global, Mat::identity(3));
  CHECK(same.act == global.act);
  CHECK(is_global(same));

  Mat avg(3, 3);
  avg(0, 0) = 1;
  avg(0, 1) = 1;
  CHECK_THROWS_AS(induced_module_coalgebra(global, avg), ProjectionFailure);
}

TEST_CASE("C-ring of E3") {
  auto cr = cring(fx::e3());
  CHECK(cr.dim() == 3);
  CHECK_FALSE(cr.carrier.contains(Vec{0, 0, 0, 1}));  // δ_g⊗x₂
  auto r = check_cring(cr);
  CHECK(r.passed());
  CHECK(r.dims().at("cotensor") == 5);
  // η(x_i) = 1⊗x_i
  for (std::size_t i = 0; i < 2; ++i) {
    Vec e(4);
    e[i] = 1;
    CHECK(cr.carrier.contains(e));
  }

  auto full = cring(grouplike_swap(2, {1, 0}));
  CHECK(full.dim() == 4);
  CHECK(check_cring(full).passed());
}

TEST_CASE("E3* is a partial comodule coalgebra") {
  auto pc = fx::e3star();
  auto r = check_partial_comodule_coalgebra(pc);
  CHECK(r.passed());
  CHECK(r.flag("symmetric"));
  CHECK_FALSE(r.flag("global"));

  Mat psi(2, 2);
  psi(0, 0) = 1;
  psi(1, 0) = 1;
  psi(0, 1) = 1;
  CHECK(psi_map(pc) == psi);
  // ε_K∘ψ = ε_C
  for (std::size_t c = 0; c < 2; ++c) CHECK(pc.k.coalgebra.counit_of(psi_map(pc).column(c)) == pc.c.counit()[c]);

  auto bad = pc;
  bad.lam = Mat(4, 2);
  bad.lam(0, 0) = 1;
  bad.lam(2, 0) = 1;
  bad.lam(3, 1) = 1;  // λ(x₂) = p_g⊗x₂
  auto br = check_partial_comodule_coalgebra(bad);
  CHECK(br.find("PLHCC2")->verdict == Verdict::fail);
  CHECK(br.find("PLHCC2")->has_witness({1}));

  auto y = y_comodule();
  CHECK(check_partial_comodule_coalgebra(y).passed());
  CHECK(is_global(y));
}

TEST_CASE("quotients of comodule coalgebras") {
  auto d = y_comodule();
  CHECK_THROWS_AS(quotient_comodule_coalgebra(d, Subspace::span(3, std::vector<Vec>{Vec{0, -1, 1}})), NotACoideal);

  auto q = quotient_comodule_coalgebra(d, Subspace::span(3, std::vector<Vec>{Vec{0, 0, 1}}));
  CHECK(check_partial_comodule_coalgebra(q).passed());
  CHECK(q.lam == fx::e3star().lam);
  CHECK(q.c == fx::c2());

  auto same = quotient_comodule_coalgebra(d, Subspace(3));
  CHECK(same.lam == d.lam);
  auto zero = quotient_comodule_coalgebra(d, Subspace::span(3, std::vector<Vec>{Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}}));
  CHECK(zero.c.dim() == 0);
  CHECK(check_partial_comodule_coalgebra(zero).passed());
}

TEST_CASE("cosmash coproduct of E3*") {
  auto cs = cosmash(fx::e3star());
  CHECK(cs.dim() == 3);
  CHECK(check_cosmash(cs).passed());
  // x₁>◂p_e, x₁>◂p_g, x₂>◂p_e
  CHECK(cs.carrier.contains(Vec{1, 0, 0, 0}));
  CHECK(cs.carrier.contains(Vec{0, 1, 0, 0}));
  CHECK(cs.carrier.contains(Vec{0, 0, 1, 0}));
  CHECK(cs.coalgebra.counit()[2] == Scalar(1));

  auto g = cosmash(y_comodule());
  CHECK(g.dim() == 6);
  CHECK(check_cosmash(g).passed());

  CHECK(cring(fx::e3()).dim() == cs.dim());
  CHECK(reduced_tensor(fx::e2()).dim() == cs.dim());
}
