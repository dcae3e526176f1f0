#include <doctest.h>

#include "fixtures.hpp"
#include "phopf/dualities.hpp"
#include "phopf/groups.hpp"

using namespace phopf;

namespace {

Mat e1_act() {
  Mat act(2, 4);
  act(0, 0) = 1;
  act(1, 1) = 1;
  act(0, 2) = 1;
  return act;
}

Mat e2_rho() {
  Mat rho(4, 2);
  rho(0, 0) = 1;
  rho(1, 0) = 1;
  rho(2, 1) = 1;
  return rho;
}

// δ_g·x₁ = x₂, δ_g·x₂ = 0
PartialModuleCoalgebra broken_e3() {
  Mat m(2, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(1, 2) = 1;
  return PartialModuleCoalgebra(fx::kz2(), fx::c2(), m);
}

}  // namespace

TEST_CASE("actions from coactions") {
  auto pa = action_from_coaction(fx::e2(), fx::kz2(), fx::z2_pairing());
  CHECK(pa.act == e1_act());
  CHECK(check_partial_action(pa).passed());
  CHECK(is_rational(pa));

  auto sw = action_from_coaction(fx::swap_coaction(), fx::kz2(), fx::z2_pairing());
  CHECK(is_global(sw));
  CHECK(sw.act == fx::swap_action().act);

  auto z3 = FiniteGroup::cyclic(3);
  auto za = action_from_coaction(fx::z3_coaction(), group_algebra(z3), canonical_group_pairing(z3));
  CHECK(check_partial_action(za).passed());
  CHECK(za.act == fx::z3_action().act);
}

TEST_CASE("coactions from actions") {
  auto pc = coaction_from_action(fx::e1(), fx::kz2_dual(), fx::z2_pairing());
  CHECK(pc.rho == e2_rho());
  CHECK(check_partial_coaction(pc).passed());

  auto sw = coaction_from_action(fx::swap_action(), fx::kz2_dual(), fx::z2_pairing());
  CHECK(sw.rho == fx::swap_coaction().rho);
  auto back = coaction_from_action(action_from_coaction(fx::e2(), fx::kz2(), fx::z2_pairing()), fx::kz2_dual(),
                                   fx::z2_pairing());
  CHECK(back.rho == fx::e2().rho);

  CHECK_THROWS_AS(coaction_from_action(fx::e1(), fx::kz2_dual(), Mat(2, 2)), DegeneratePairing);
  CHECK_THROWS_AS(coaction_from_action(fx::e1(), fx::kz2_dual(), Mat(2, 3)), DimensionMismatch);
}

TEST_CASE("module coalgebras and module algebras") {
  auto t = module_coalgebra_vs_module_algebra(fx::e3(), fx::fun2(), Mat::identity(2));
  CHECK(t.report.passed());
  CHECK(check_right_partial_action(t.algebra_side).passed());
  // χ₁·δ_g = χ₁, χ₂·δ_g = 0
  Mat ra(2, 4);
  ra(0, 0) = 1;
  ra(1, 2) = 1;
  ra(0, 1) = 1;
  CHECK(t.algebra_side.act == ra);

  auto back = module_coalgebra_vs_module_algebra(t.algebra_side, fx::c2(), Mat::identity(2));
  CHECK(back.coalgebra_side.act == fx::e3().act);

  Mat swap(2, 4);
  swap(0, 0) = 1;
  swap(1, 1) = 1;
  swap(1, 2) = 1;
  swap(0, 3) = 1;
  auto g = module_coalgebra_vs_module_algebra(PartialModuleCoalgebra(fx::kz2(), fx::c2(), swap), fx::fun2(),
                                              Mat::identity(2));
  CHECK(g.report.passed());
  CHECK(is_global(mirror(g.algebra_side)));

  auto b = module_coalgebra_vs_module_algebra(broken_e3(), fx::fun2(), Mat::identity(2));
  CHECK_FALSE(b.report.passed());
  CHECK(b.report.find("(a·h,c)=(a,h·c)")->verdict == Verdict::pass);
  CHECK(b.report.find("PLHMC ⇔ right PLA")->verdict == Verdict::pass);
  auto rr = check_right_partial_action(b.algebra_side);
  CHECK(rr.find("PLA3")->verdict == Verdict::fail);
  CHECK(check_partial_module_coalgebra(broken_e3()).find("PLHMC3")->verdict == Verdict::fail);
}

TEST_CASE("comodule coalgebras and comodule algebras") {
  auto r = comodule_coalgebra_vs_comodule_algebra(fx::e3star(), fx::e2(), Mat::identity(2));
  CHECK(r.passed());
  CHECK(r.find("(a⁰,c)a¹=c⁻¹(a,c⁰)")->verdict == Verdict::pass);
  CHECK(r.find("PRHCA ⇔ PLHCC")->verdict == Verdict::pass);

  auto bad = fx::e2();
  bad.rho(2, 1) = 2;
  auto br = comodule_coalgebra_vs_comodule_algebra(fx::e3star(), bad, Mat::identity(2));
  const auto* rel = br.find("(a⁰,c)a¹=c⁻¹(a,c⁰)");
  CHECK(rel->verdict == Verdict::fail);
  CHECK(rel->has_witness({1, 1}));
}

TEST_CASE("module coalgebras from comodule coalgebras") {
  auto r = module_coalgebra_from_comodule_coalgebra(fx::e3star(), fx::kz2(), fx::z2_pairing());
  CHECK(check_right_partial_module_coalgebra(r).passed());
  // x₁·δ_g = x₁, x₂·δ_g = 0
  Mat act(2, 4);
  act(0, 0) = 1;
  act(0, 1) = 1;
  act(1, 2) = 1;
  CHECK(r.act == act);
  auto back = comodule_coalgebra_from_module_coalgebra(r, fx::kz2_dual(), fx::z2_pairing());
  CHECK(back.lam == fx::e3star().lam);
  CHECK(check_partial_comodule_coalgebra(back).passed());
}

TEST_CASE("module coalgebra from a left K-comodule algebra") {
  auto r = module_coalgebra_from_K_comodule_algebra(fx::kz2_dual(), fx::fun2(), fx::e2_left(), fx::z2_pairing(),
                                                    Mat::identity(2), fx::e3());
  CHECK(r.passed());

  auto pm = fx::e3();
  pm.act(1, 3) = 1;  // δ_g·x₂ = x₂
  auto b = module_coalgebra_from_K_comodule_algebra(fx::kz2_dual(), fx::fun2(), fx::e2_left(), fx::z2_pairing(),
                                                    Mat::identity(2), pm);
  const auto* rel = b.find("(a,h·c)=⟨h,a⁻¹⟩(a⁰,c)");
  REQUIRE(rel != nullptr);
  CHECK(rel->verdict == Verdict::fail);
  CHECK(rel->has_witness({1, 1, 1}));
}

TEST_CASE("smash and cosmash are paired") {
  auto p = smash_cosmash_pairing(fx::e1(), fx::e3star(), fx::z2_pairing(), Mat::identity(2));
  CHECK(p.report.passed());
  CHECK(p.form.rows() == 3);
  CHECK(p.form.cols() == 3);
  // ⟨⟨1#1, x>◂ξ⟩⟩ = ε̂(x>◂ξ)
  Vec one = p.smash.algebra.unit();
  for (std::size_t j = 0; j < 3; ++j) {
    Scalar s;
    for (std::size_t i = 0; i < 3; ++i) s += one[i] * p.form(i, j);
    CHECK(s == p.cosmash.coalgebra.counit()[j]);
  }
}

TEST_CASE("C-ring and coring are paired") {
  auto r = cring_coring_pairing(fx::kz2_dual(), fx::fun2(), fx::e2_left(), fx::e3(), fx::z2_pairing(),
                                Mat::identity(2));
  CHECK(r.passed());
  CHECK_FALSE(r.flag("degenerate"));

  auto d = cring_coring_pairing(fx::kz2_dual(), fx::fun2(), fx::e2_left(), fx::e3(), fx::z2_pairing(), Mat(2, 2));
  CHECK(d.flag("degenerate"));
  CHECK(d.find("L1 well-defined")->verdict == Verdict::undetermined);
}

TEST_CASE("transfers are functorial") {
  // f : Fun{1,2} → k, χ₁ ↦ 1, χ₂ ↦ 0, is a morphism from E2 to the trivial coaction on a point.
  auto point = to_dual_partial_coaction(SetPartialAction::global(fx::z2(), {{0}, {0}}));
  Mat f(1, 2);
  f(0, 0) = 1;
  auto e2 = fx::e2();
  for (std::size_t a = 0; a < 2; ++a) {
    Vec l = point.apply(f.column(a));
    Vec r(2);
    Vec ra = e2.apply(unit_vec(2, a));
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t xi = 0; xi < 2; ++xi) r[xi] += f(0, x) * ra[x * 2 + xi];
    REQUIRE(l == r);
  }
  auto pa = action_from_coaction(e2, fx::kz2(), fx::z2_pairing());
  auto pb = action_from_coaction(point, fx::kz2(), fx::z2_pairing());
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t a = 0; a < 2; ++a) {
      CAPTURE(h);
      CAPTURE(a);
      CHECK(f.apply(pa.apply(unit_vec(2, h), unit_vec(2, a))) == pb.apply(unit_vec(2, h), f.column(a)));
    }
}

TEST_CASE("transfers of random set actions") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    auto spa = fx::random_set_action(rng);
    auto pc = to_dual_partial_coaction(spa);
    auto h = group_algebra(spa.g);
    auto form = canonical_group_pairing(spa.g);
    auto pa = action_from_coaction(pc, h, form);
    CHECK(check_partial_action(pa).passed());
    CHECK(coaction_from_action(pa, dual_group_hopf(spa.g), form).rho == pc.rho);
  }
}
