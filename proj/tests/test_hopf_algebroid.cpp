#include <doctest.h>

#include "fixtures.hpp"
#include "phopf/dualities.hpp"
#include "phopf/hopf_algebroid.hpp"

using namespace phopf;

namespace {

bool all_pass_with_prefix(const Report& r, const std::string& prefix) {
  for (const auto& a : r.axioms())
    if (a.id.rfind(prefix, 0) == 0 && a.verdict != Verdict::pass) return false;
  return true;
}

}  // namespace

TEST_CASE("corings") {
  CHECK(check_coring(trivial_coring(fx::fun2())).passed());
  CHECK(check_coring(split_coring(fx::swap_coaction())).passed());

  auto c = split_coring(fx::e2());
  c.counit = Mat(c.counit.rows(), c.counit.cols());
  auto r = check_coring(c);
  CHECK_FALSE(r.passed());
  CHECK(r.find("counit:ε(x₁)▷x₂=x")->verdict == Verdict::fail);
  CHECK(r.find("coassociativity")->verdict == Verdict::pass);
}

TEST_CASE("Takeuchi membership") {
  auto hh = smash_hopf_algebroid(fx::e1());
  std::size_t n = hh.dim();
  Vec one = hh.total.unit();
  CHECK(takeuchi_membership_rep(sp_kron(sparse(one), n, sparse(one)), hh, Side::left));
  for (std::size_t x = 0; x < n; ++x) {
    CHECK(takeuchi_membership_rep(hh.delta_l[x], hh, Side::left));
    CHECK(takeuchi_membership_rep(hh.delta_r[x], hh, Side::right));
  }

  // The smash algebroid of the swap has a noncommutative total algebra, so some tensors fall outside.
  auto sw = smash_hopf_algebroid(fx::swap_action());
  CHECK_FALSE(sw.total.is_commutative());
  std::size_t m = sw.dim();
  bool outside = false;
  for (std::size_t x = 0; x < m && !outside; ++x)
    for (std::size_t y = 0; y < m && !outside; ++y) {
      SparseVec t{{x * m + y, Scalar(1)}};
      outside = !takeuchi_membership_rep(t, sw, Side::left);
    }
  CHECK(outside);
}

TEST_CASE("bialgebroids from E1 and E2") {
  auto e1 = smash_hopf_algebroid(fx::e1());
  CHECK(check_left_bialgebroid(e1).passed());
  CHECK(check_right_bialgebroid(e1).passed());
  auto e2 = partial_split_hopf_algebroid(fx::e2());
  CHECK(check_left_bialgebroid(e2).passed());
  CHECK(check_right_bialgebroid(e2).passed());
  CHECK(check_left_bialgebroid(split_hopf_algebroid(fx::swap_coaction())).passed());
}

TEST_CASE("E1 antipode is already the identity") {
  auto hh = smash_hopf_algebroid(fx::e1());
  CHECK(*hh.antipode == Mat::identity(3));
  hh.antipode = Mat::identity(3);
  CHECK(check_hopf_algebroid(hh).passed());
}

TEST_CASE("E1 with 𝒮(χ₁#δ_g)=0 fails axiom (iv) at χ₁#δ_g") {
  auto hh = smash_hopf_algebroid(fx::e1());
  Mat s = Mat::identity(3);
  s(1, 1) = 0;
  hh.antipode = s;
  auto r = check_hopf_algebroid(hh);
  const auto* first = r.first_failure();
  REQUIRE(first);
  CHECK(first->id.rfind("(iv)", 0) == 0);
  for (const auto& a : r.axioms()) {
    if (a.verdict != Verdict::fail) continue;
    if (a.id.rfind("(iv)", 0) == 0) {
      CHECK(a.failures == 1);
      CHECK(a.has_witness({1}));
    }
  }
  CHECK(all_pass_with_prefix(r, "(i)"));
  CHECK(all_pass_with_prefix(r, "(ii)"));
  CHECK(all_pass_with_prefix(r, "(iii)"));
}

TEST_CASE("canonical skew pairing of E2 and E1") {
  auto sp = canonical_skew_pairing(fx::e2(), fx::e1(), fx::z2_pairing());
  CHECK(check_skew_pairing(sp).passed());
  CHECK(sp.eval(sp.lambda.total.unit(), sp.l.total.unit()) == fx::fun2().unit());
  // ⟨⟨χ₁⊗p_g·ρ̄(1) | χ₁#δ_g⟩⟩ = χ₁.
  CHECK(sp.lambda.total.name(1) == "χ1⊗p_g");
  CHECK(sp.l.total.name(1) == "χ1#δ_g");
  CHECK(sp.eval(unit_vec(3, 1), unit_vec(3, 1)) == unit_vec(2, 0));
}

TEST_CASE("scaling the skew pairing by 2 breaks SP4") {
  auto sp = canonical_skew_pairing(fx::e2(), fx::e1(), fx::z2_pairing());
  sp.form = Scalar(2) * sp.form;
  auto r = check_skew_pairing(sp);
  CHECK(r.find("SP4")->verdict == Verdict::fail);
}
