#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "phopf/dualities.hpp"
#include "phopf/groups.hpp"

using namespace phopf;

namespace {

// ℤ₂ acting on three points with α_g a 3-cycle.
SetPartialAction three_cycle() {
  return SetPartialAction(fx::z2(), 3, {{true, true, true}, {true, true, true}}, {{0, 1, 2}, {1, 2, 0}});
}

StarFunctor collapse(const FiniteGroupoid& gd) {
  return StarFunctor{gd, fx::z2(), std::vector<std::size_t>(gd.arrow_count(), 0)};
}

}  // namespace

TEST_CASE("set partial actions") {
  CHECK(check_set_partial_action(fx::swap_set()).passed());
  CHECK(is_global(fx::swap_set()));
  auto r = check_set_partial_action(fx::e1set());
  CHECK(r.passed());
  CHECK_FALSE(r.flag("global"));
  CHECK(check_set_partial_action(fx::z3_restricted_set()).passed());

  // X_g = {1, 2} with the swap is the global swap, which is a genuine action.
  auto literal = SetPartialAction(fx::z2(), 2, {{true, true}, {true, true}}, {{0, 1}, {1, 0}});
  CHECK(literal == fx::swap_set());
  CHECK(check_set_partial_action(literal).passed());

  auto bad = check_set_partial_action(three_cycle());
  CHECK(bad.find("(a)")->verdict == Verdict::pass);
  CHECK(bad.find("(b)")->verdict == Verdict::pass);
  const auto* c = bad.find("(c)");
  REQUIRE(c != nullptr);
  CHECK(c->verdict == Verdict::fail);
  CHECK(c->has_witness({1, 1, 0}));
  CHECK(bad.first_failure()->id == "(c)");

  // A partial bijection with the wrong domain is refused at construction.
  CHECK_THROWS_AS(SetPartialAction(fx::z2(), 2, {{true, true}, {true, false}}, {{0, 1}, {1, -1}}), MalformedTable);
}

TEST_CASE("E1set gives E1 and E2") {
  Mat act(2, 4);
  act(0, 0) = 1;
  act(1, 1) = 1;
  act(0, 2) = 1;
  auto pa = to_kG_partial_action(fx::e1set());
  CHECK(pa.act == act);
  CHECK(check_partial_action(pa).passed());
  CHECK(check_partial_action(pa).flag("symmetric"));
  CHECK_FALSE(is_global(pa));

  Mat rho(4, 2);
  rho(0, 0) = 1;
  rho(1, 0) = 1;
  rho(2, 1) = 1;
  auto pc = to_dual_partial_coaction(fx::e1set());
  CHECK(pc.rho == rho);
  CHECK(check_partial_coaction(pc).passed());
  CHECK(check_partial_coaction(pc).flag("symmetric"));

  CHECK(is_global(to_kG_partial_action(fx::swap_set())));
  auto triv = SetPartialAction::global(FiniteGroup::trivial(), {{0, 1, 2}});
  CHECK(to_kG_partial_action(triv).act == Mat::identity(3));
  CHECK(to_dual_partial_coaction(triv).rho == Mat::identity(3));
}

TEST_CASE("groupoid of E1set") {
  auto gd = groupoid_of_action(fx::e1set());
  CHECK(check_groupoid(gd).passed());
  REQUIRE(gd.arrow_count() == 3);
  // (1,e), (1,g), (2,e)
  CHECK(gd.arrows[1].source == 0);
  CHECK(gd.arrows[1].target == 0);
  CHECK(gd.arrows[2].source == 1);
  CHECK(gd.comp(1, 1) == 0);
  CHECK(gd.comp(1, 2) == -1);
  CHECK(gd.inverse[1] == 1);
  CHECK(gd.units == std::vector<std::size_t>{0, 2});

  auto sw = groupoid_of_action(fx::swap_set());
  CHECK(check_groupoid(sw).passed());
  CHECK(sw.arrow_count() == 4);
  auto triv = groupoid_of_action(SetPartialAction::global(FiniteGroup::trivial(), {{0, 1}}));
  CHECK(triv.arrow_count() == 2);
  CHECK(triv.comp(0, 1) == -1);
}

TEST_CASE("star functors") {
  auto f = projection_functor(fx::e1set());
  CHECK(check_functor(f).passed());
  auto r = star_report(f);
  CHECK(r.passed());
  CHECK(r.flag("star injective"));
  CHECK_FALSE(r.flag("star surjective"));
  CHECK(action_from_functor(f) == fx::e1set());

  auto g = projection_functor(fx::swap_set());
  CHECK(check_star_injective(g));
  CHECK(check_star_surjective(g));
  auto back = action_from_functor(g);
  CHECK(is_global(back));
  CHECK(back == fx::swap_set());

  auto col = collapse(groupoid_of_action(fx::e1set()));
  CHECK(check_functor(col).passed());
  auto cr = star_report(col);
  CHECK_FALSE(cr.flag("star injective"));
  CHECK(cr.find("star injective")->has_witness({0, 1}));
  CHECK_THROWS_AS(action_from_functor(col), NotStarInjective);

  auto wrong = StarFunctor{groupoid_of_action(fx::swap_set()), fx::z2(), {1, 0, 0, 0}};
  CHECK_FALSE(check_functor(wrong).passed());
  CHECK_THROWS_AS(action_from_functor(wrong), NotAFunctor);
}

TEST_CASE("identity functor of a group") {
  auto z3 = FiniteGroup::cyclic(3);
  auto one = SetPartialAction::global(z3, {{0}, {0}, {0}});
  auto f = projection_functor(one);
  CHECK(f.label == std::vector<std::size_t>{0, 1, 2});
  auto back = action_from_functor(f);
  CHECK(back == one);
  CHECK(is_global(back));
}

TEST_CASE("function algebroid of the E1set groupoid") {
  auto gd = groupoid_of_action(fx::e1set());
  auto fun = function_hopf_algebroid(gd);
  CHECK(fun.dim() == 3);
  CHECK_NOTHROW(check_hopf_algebroid(fun));
  CHECK(check_hopf_algebroid(fun).passed());

  auto split = partial_split_hopf_algebroid(fx::e2());
  CHECK(fun.total == split.total);
  CHECK(fun.base == split.base);
  CHECK(fun.s_l == split.s_l);
  CHECK(fun.t_l == split.t_l);
  CHECK(fun.s_r == split.s_r);
  CHECK(fun.t_r == split.t_r);
  CHECK(fun.eps_l == split.eps_l);
  CHECK(fun.eps_r == split.eps_r);
  REQUIRE(fun.antipode);
  REQUIRE(split.antipode);
  CHECK(*fun.antipode == *split.antipode);
  BalancedPair pl(fun.bimodule(Side::left));
  for (std::size_t x = 0; x < 3; ++x) CHECK(pl.project(fun.delta_l[x]) == pl.project(split.delta_l[x]));

  // Discrete groupoid: the base algebra itself.
  auto disc = function_hopf_algebroid(groupoid_of_action(SetPartialAction::global(FiniteGroup::trivial(), {{0, 1}})));
  CHECK(disc.dim() == 2);
  CHECK(disc.s_l == Mat::identity(2));
  CHECK(check_hopf_algebroid(disc).passed());

  auto z3 = function_hopf_algebroid(groupoid_of_action(fx::z3_restricted_set()));
  CHECK(check_hopf_algebroid(z3).passed());
}

TEST_CASE("dual star injective functors") {
  auto f = projection_functor(fx::e1set());
  auto fun = function_hopf_algebroid(f.domain);
  auto [fh, sigma] = functor_dual_star(f);
  auto h = fx::kz2_dual();
  auto r = check_dual_star_injective(fh, h, fun, sigma);
  CHECK(r.passed());
  CHECK(r.dims().at("rank Π") == 3);
  CHECK(r.dims().at("dim A⊗H") == 4);
  CHECK_FALSE(r.flag("global"));

  auto pc = coaction_from_dual_star(fh, sigma, h, fun);
  CHECK(pc.rho == fx::e2().rho);
  CHECK(check_partial_coaction(pc).passed());
  // Without σ the canonical candidate gives the same coaction.
  CHECK(coaction_from_dual_star(fh, std::nullopt, h, fun).rho == fx::e2().rho);

  // Global split algebroid with F(h) = 1⊗h and σ = id.
  auto sw = fx::swap_coaction();
  auto split = split_hopf_algebroid(sw);
  Mat inc(4, 2);
  for (std::size_t xi = 0; xi < 2; ++xi)
    for (std::size_t a = 0; a < 2; ++a) inc(a * 2 + xi, xi) = 1;
  auto gr = check_dual_star_injective(inc, h, split, Mat::identity(4));
  CHECK(gr.passed());
  CHECK(gr.flag("global"));
  CHECK(coaction_from_dual_star(inc, Mat::identity(4), h, split).rho == sw.rho);
}

TEST_CASE("E2 algebroid with the canonical inclusion") {
  auto pc = fx::e2();
  auto ps = partial_split_hopf_algebroid(pc);
  auto h = fx::kz2_dual();
  // F(p) = ρ̄(1)(1⊗p), in carrier coordinates.
  auto rt = reduced_tensor(pc);
  Mat f(ps.dim(), h.dim());
  Vec one = pc.one();
  for (std::size_t xi = 0; xi < h.dim(); ++xi) {
    Vec e(4);
    for (std::size_t a = 0; a < 2; ++a) e[a * 2 + xi] = 1;
    Vec prod = rt.ambient.multiply(one, e);
    auto coords = rt.carrier.coordinates(prod);
    REQUIRE(coords);
    for (std::size_t i = 0; i < coords->size(); ++i) f(i, xi) = (*coords)[i];
  }
  Mat sigma = rt.carrier.embedding();
  auto r = check_dual_star_injective(f, h, ps, sigma);
  CHECK(r.passed());
  CHECK(coaction_from_dual_star(f, sigma, h, ps).rho == pc.rho);
}

TEST_CASE("random set actions round trip") {
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 25; ++i) {
    auto spa = fx::random_set_action(rng);
    CAPTURE(i);
    REQUIRE(check_set_partial_action(spa).passed());
    auto f = projection_functor(spa);
    CHECK(action_from_functor(f) == spa);
    CHECK(check_star_surjective(f) == is_global(to_kG_partial_action(spa)));

    auto pc = to_dual_partial_coaction(spa);
    CHECK(check_partial_coaction(pc).passed());
    CHECK(groupoid_of_action(spa).arrow_count() == reduced_tensor(pc).dim());
    auto pa = to_kG_partial_action(spa);
    CHECK(check_partial_action(pa).passed());
    CHECK(action_from_coaction(pc, group_algebra(spa.g), canonical_group_pairing(spa.g)).act == pa.act);

    auto fun = function_hopf_algebroid(f.domain);
    auto [fh, sigma] = functor_dual_star(f);
    CHECK(coaction_from_dual_star(fh, sigma, dual_group_hopf(spa.g), fun).rho == pc.rho);
  }
}
