#include <doctest.h>

#include "fixtures.hpp"
#include "phopf/partial_coactions.hpp"

using namespace phopf;

namespace {

Vec v(std::initializer_list<long long> xs) {
  Vec out;
  for (auto x : xs) out.push_back(Scalar(x));
  return out;
}

PartialCoaction trivial_coaction(const HopfPackage& k, const AlgebraSC& a) {
  Mat rho(a.dim() * k.dim(), a.dim());
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t xi = 0; xi < k.dim(); ++xi) rho(x * k.dim() + xi, x) = k.algebra.unit()[xi];
  return PartialCoaction(k, a, rho);
}

}  // namespace

TEST_CASE("global swap coaction") {
  auto pc = fx::swap_coaction();
  auto r = check_partial_coaction(pc);
  CHECK(r.passed());
  CHECK(r.flag("symmetric"));
  CHECK(is_global(pc));
  // ρ(1) = 1⊗1 = (χ₁+χ₂)⊗(p_e+p_g).
  CHECK(pc.one() == v({1, 1, 1, 1}));
}

TEST_CASE("E2 is a symmetric partial coaction") {
  auto pc = fx::e2();
  auto r = check_partial_coaction(pc);
  CHECK(r.passed());
  CHECK(r.flag("symmetric"));
  CHECK_FALSE(is_global(pc));
  // ρ̄(1) = 1⊗p_e + χ₁⊗p_g.
  CHECK(pc.one() == v({1, 1, 1, 0}));
}

TEST_CASE("E2 without a p_g term in ρ̄(χ₂) is E2 itself") {
  Mat rho = fx::e2().rho;
  CHECK(rho(3, 1).is_zero());
  CHECK(check_partial_coaction(PartialCoaction(fx::kz2_dual(), fx::fun2(), rho)).passed());
}

TEST_CASE("ρ̄(χ₂)=2χ₂⊗p_e fails PRHCA1 first, at (χ₂,χ₂)") {
  Mat rho = fx::e2().rho;
  rho(2, 1) = 2;
  auto r = check_partial_coaction(PartialCoaction(fx::kz2_dual(), fx::fun2(), rho));
  const auto* first = r.first_failure();
  REQUIRE(first);
  CHECK(first->id == "PRHCA1");
  CHECK(first->failures == 1);
  CHECK(first->has_witness({1, 1}));
}

TEST_CASE("restricted coactions") {
  auto sw = fx::swap_coaction();
  CHECK(restricted_coaction(sw, sw.a.unit()).rho == sw.rho);

  auto small = restricted_coaction(sw, unit_vec(2, 0));
  CHECK(small.a.dim() == 1);
  auto r = check_partial_coaction(small);
  CHECK(r.passed());
  CHECK(r.flag("symmetric"));

  auto z3 = fx::z3_coaction();
  CHECK(check_partial_coaction(z3).passed());
  CHECK_FALSE(is_global(z3));
}

TEST_CASE("reduced tensor and split coring of E2") {
  auto pc = fx::e2();
  auto rt = reduced_tensor(pc);
  CHECK(rt.dim() == 3);
  CHECK(rt.algebra.names() == std::vector<std::string>{"χ1⊗p_e", "χ1⊗p_g", "χ2⊗p_e"});
  Vec one = pc.one();
  CHECK(rt.ambient.multiply(one, one) == one);

  CHECK(reduced_tensor(fx::swap_coaction()).dim() == 4);

  auto c = split_coring(pc);
  CHECK(check_coring(c).passed());
  CHECK(c.module.dim == 3);
  // ε̃(χ₁⊗p_g·ρ̄(1)) = χ₁ε(p_g) = 0.
  CHECK(is_zero(c.counit.column(1)));
  CHECK(c.counit.column(0) == unit_vec(2, 0));
}

TEST_CASE("partial split Hopf algebroids") {
  auto e2 = partial_split_hopf_algebroid(fx::e2());
  CHECK(e2.dim() == 3);
  CHECK(check_hopf_algebroid(e2).passed());

  auto sw = partial_split_hopf_algebroid(fx::swap_coaction());
  CHECK(sw.dim() == 4);
  CHECK(check_hopf_algebroid(sw).passed());
}

TEST_CASE("split Hopf algebroid agrees with the partial construction on global input") {
  auto pc = fx::swap_coaction();
  auto a = split_hopf_algebroid(pc), b = partial_split_hopf_algebroid(pc);
  CHECK(a.total == b.total);
  CHECK(a.s_l == b.s_l);
  CHECK(a.t_l == b.t_l);
  CHECK(a.s_r == b.s_r);
  CHECK(a.t_r == b.t_r);
  CHECK(a.eps_l == b.eps_l);
  CHECK(a.eps_r == b.eps_r);
  CHECK(a.delta_l == b.delta_l);
  CHECK(a.delta_r == b.delta_r);
  CHECK(*a.antipode == *b.antipode);
  CHECK_THROWS_AS(split_hopf_algebroid(fx::e2()), PreconditionFailure);
}

TEST_CASE("trivial coaction gives t_l = s_l") {
  auto pc = trivial_coaction(fx::kz2_dual(), fx::fun2());
  CHECK(is_global(pc));
  auto hh = split_hopf_algebroid(pc);
  CHECK(hh.t_l == hh.s_l);
  CHECK(check_hopf_algebroid(hh).passed());
}

TEST_CASE("noncommutative K is refused") {
  auto pc = trivial_coaction(group_algebra(FiniteGroup::symmetric(3)), fx::fun2());
  CHECK(check_partial_coaction(pc).passed());
  try {
    partial_split_hopf_algebroid(pc);
    FAIL("expected a refusal");
  } catch (const PreconditionFailure& e) {
    CHECK(e.hypothesis() == "K is commutative");
  }
}

TEST_CASE("left dual ring comparison") {
  auto r = left_dual_ring_compare(fx::e2(), fx::kz2(), fx::z2_pairing());
  CHECK(r.passed());
  const auto* bij = r.find("Θ bijective");
  REQUIRE(bij);
  CHECK(bij->verdict == Verdict::pass);

  Mat counit_form(2, 2);
  counit_form(0, 0) = 1;
  counit_form(1, 0) = 1;
  auto d = left_dual_ring_compare(fx::e2(), fx::kz2(), counit_form);
  const auto* inj = d.find("Θ injective");
  REQUIRE(inj);
  CHECK(inj->verdict == Verdict::fail);

  auto z = left_dual_ring_compare(fx::e2(), fx::kz2(), Mat(2, 2));
  CHECK_FALSE(z.passed());
}

TEST_CASE("left coactions are right coactions of the op-cop algebra") {
  auto pc = from_left_coaction(fx::kz2_dual(), fx::fun2(), fx::e2_left());
  CHECK(check_partial_coaction(pc).passed());
  CHECK(pc.rho == fx::e2().rho);
}
