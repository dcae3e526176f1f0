#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "phopf/coalgebra_partial.hpp"
#include "phopf/dualities.hpp"
#include "phopf/groups.hpp"

using namespace phopf;

namespace {

struct Failure {
  std::string what;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

bool all_pass(const Report& r, const std::string& prefix) {
  bool any = false;
  for (const auto& a : r.axioms())
    if (a.id.rfind(prefix, 0) == 0) {
      any = true;
      if (a.verdict != Verdict::pass) return false;
    }
  return any;
}

// The first failing axiom is `id`, it fails at `tuple`, and every axiom checked before it passes.
void fails_first(const Report& r, const std::string& id, const std::vector<std::size_t>& tuple) {
  const auto* first = r.first_failure();
  need(first != nullptr, id + ": the report passes");
  need(first->id.rfind(id, 0) == 0, id + ": first failure is " + first->id);
  need(first->has_witness(tuple), id + ": witness missing");
  for (const auto& a : r.axioms()) {
    if (&a == first) break;
    need(a.informational || a.verdict == Verdict::pass, id + ": " + a.id + " fails earlier");
  }
}

bool same_algebroid(const HopfAlgebroid& a, const HopfAlgebroid& b) {
  if (!(a.total == b.total && a.base == b.base && a.s_l == b.s_l && a.t_l == b.t_l && a.s_r == b.s_r &&
        a.t_r == b.t_r && a.eps_l == b.eps_l && a.eps_r == b.eps_r && a.antipode.has_value() == b.antipode.has_value()))
    return false;
  if (a.antipode && !(*a.antipode == *b.antipode)) return false;
  BalancedPair l(a.bimodule(Side::left)), r(a.bimodule(Side::right));
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (l.project(a.delta_l[x]) != l.project(b.delta_l[x]) || r.project(a.delta_r[x]) != r.project(b.delta_r[x]))
      return false;
  return true;
}

void criterion1() {
  auto hh = smash_hopf_algebroid(fx::e1());
  need(hh.dim() == 3, "carrier dim");
  auto r = check_hopf_algebroid(hh);
  need(r.passed(), "Hopf algebroid checker");
  need(all_pass(r, "left:") && all_pass(r, "right:"), "bialgebroid axioms");
  for (const char* p : {"(i)", "(ii)", "(iii)", "(iv)"}) need(all_pass(r, p), std::string("axiom ") + p);
}

void criterion2() {
  auto ps = partial_split_hopf_algebroid(fx::e2());
  need(ps.dim() == 3, "carrier dim");
  need(check_hopf_algebroid(ps).passed(), "partial split checker");
  auto sw = partial_split_hopf_algebroid(fx::swap_coaction());
  need(sw.dim() == 4, "global carrier dim");
  need(check_hopf_algebroid(sw).passed(), "global checker");
  need(same_algebroid(sw, split_hopf_algebroid(fx::swap_coaction())), "split algebroid matrices");
}

void criterion3() {
  auto pair = fx::z2_pairing();
  need(action_from_coaction(fx::e2(), fx::kz2(), pair).act == fx::e1().act, "E2 → E1");
  need(coaction_from_action(fx::e1(), fx::kz2_dual(), pair).rho == fx::e2().rho, "E1 → E2");
  need(coaction_from_action(action_from_coaction(fx::e2(), fx::kz2(), pair), fx::kz2_dual(), pair).rho ==
           fx::e2().rho,
       "E2 round trip");
  auto z3 = FiniteGroup::cyclic(3);
  auto h = group_algebra(z3);
  auto k = dual_group_hopf(z3);
  auto form = canonical_group_pairing(z3);
  auto pa = fx::z3_action();
  auto pc = fx::z3_coaction();
  need(action_from_coaction(pc, h, form).act == pa.act, "ℤ₃ coaction → action");
  need(coaction_from_action(pa, k, form).rho == pc.rho, "ℤ₃ action → coaction");
  need(action_from_coaction(coaction_from_action(pa, k, form), h, form).act == pa.act, "ℤ₃ round trip");
}

void criterion4() {
  auto sp = canonical_skew_pairing(fx::e2(), fx::e1(), fx::z2_pairing());
  auto r = check_skew_pairing(sp);
  need(r.passed(), "skew pairing checker");
  for (const char* p : {"SP1", "SP2", "SP3", "SP4", "SP5"}) need(all_pass(r, p), p);
}

void criterion5() {
  auto f = projection_functor(fx::e1set());
  need(check_star_injective(f), "π₂ star injective");
  need(!check_star_surjective(f), "π₂ not star surjective");
  auto fun = function_hopf_algebroid(f.domain);
  auto [fh, sigma] = functor_dual_star(f);
  auto r = check_dual_star_injective(fh, fx::kz2_dual(), fun, sigma);
  need(r.passed(), "dual star injective");
  need(coaction_from_dual_star(fh, sigma, fx::kz2_dual(), fun).rho == fx::e2().rho, "E2 recovered");
  need(f.domain.arrow_count() == 3 && reduced_tensor(fx::e2()).dim() == 3, "arrows = dim A⊗̲K = 3");
  need(!r.flag("global") && r.dims().at("rank Π") < r.dims().at("dim A⊗H"), "non-global Π not bijective");

  auto g = projection_functor(fx::swap_set());
  auto gfun = function_hopf_algebroid(g.domain);
  auto [gh, gs] = functor_dual_star(g);
  auto gr = check_dual_star_injective(gh, fx::kz2_dual(), gfun, gs);
  need(gr.passed() && gr.flag("global"), "global Π bijective");
  need(gr.dims().at("rank Π") == gr.dims().at("dim A⊗H"), "global rank");
  need(is_global(coaction_from_dual_star(gh, gs, fx::kz2_dual(), gfun)), "global coaction");
}

void criterion6() {
  auto cr = cring(fx::e3());
  need(cr.dim() == 3, "carrier dim");
  auto r = check_cring(cr);
  need(r.passed(), "C-ring checker");
  for (const char* id : {"bicomodule", "μ associative", "μ(η⊗I)λ=I", "μ(I⊗η)ρ=I"}) {
    const auto* a = r.find(id);
    need(a != nullptr && a->verdict == Verdict::pass && a->instances > 0, id);
  }
}

void criterion7() {
  auto pc = fx::e3star();
  auto cs = cosmash(pc);
  need(cs.dim() == 3, "carrier dim");
  auto r = check_cosmash(cs);
  need(all_pass(r, "coassociativity") && all_pass(r, "counit"), "coassociative and counital");
  auto pr = check_partial_comodule_coalgebra(pc);
  need(pr.find("ψ*ψ=ψ")->verdict == Verdict::pass, "ψ*ψ=ψ");
  Mat psi = psi_map(pc);
  need(psi(0, 1) == Scalar(1) && psi(1, 1) == Scalar(0), "ψ(x₂)=p_e");
}

void criterion8() {
  auto p = smash_cosmash_pairing(fx::e1(), fx::e3star(), fx::z2_pairing(), Mat::identity(2));
  need(p.form.rows() == 3 && p.form.cols() == 3, "3×3 form");
  need(p.report.passed(), "dual pairing laws");
}

void criterion9() {
  auto e3 = fx::e3();
  auto g = kG_to_group(e3, fx::z2());
  need(check_group_action_on_coalgebra(g).passed(), "E3 group data");
  need(group_to_kG(g).act == e3.act, "E3 kG → G → kG");
  need(kG_to_group(group_to_kG(g), fx::z2()) == g, "E3 G → kG → G");
  auto z3 = fx::z3_module_coalgebra();
  auto c3 = FiniteGroup::cyclic(3);
  auto g3 = kG_to_group(z3, c3);
  need(check_group_action_on_coalgebra(g3).passed(), "ℤ₃ group data");
  need(group_to_kG(g3).act == z3.act, "ℤ₃ kG → G → kG");
  need(kG_to_group(group_to_kG(g3), c3) == g3, "ℤ₃ G → kG → G");
}

void criterion10() {
  auto z2 = fx::kz2();
  fails_first(check_package(HopfPackage(z2.algebra, z2.coalgebra, Mat(2, 2)), PackageLevel::hopf), "S*id=ηε", {1});

  Mat pi(2, 2);
  pi(0, 0) = 1, pi(1, 0) = 1, pi(0, 1) = 2;
  fails_first(check_partial_representation(pi, z2, fx::fun2()), "PR2", {1, 1});

  fails_first(check_partial_action(fx::broken_e1()), "PLA3", {1, 1, 1});

  Mat rho = fx::e2().rho;
  rho(2, 1) = 2;
  fails_first(check_partial_coaction(PartialCoaction(fx::kz2_dual(), fx::fun2(), rho)), "PRHCA1", {1, 1});

  auto hh = smash_hopf_algebroid(fx::e1());
  Mat s = Mat::identity(3);
  s(1, 1) = 0;
  hh.antipode = s;
  fails_first(check_hopf_algebroid(hh), "(iv)", {1});

  auto cyc = SetPartialAction(fx::z2(), 3, {{true, true, true}, {true, true, true}}, {{0, 1, 2}, {1, 2, 0}});
  fails_first(check_set_partial_action(cyc), "(c)", {1, 1, 0});

  // The literal variants are genuine structures and are accepted.
  Mat act = fx::e1().act;
  act(1, 3) = 1;
  need(check_partial_action(PartialAction(fx::kz2(), fx::fun2(), act)).passed(), "E1 with δ_g·χ₂=χ₂ accepted");
  need(check_partial_coaction(fx::e2()).passed(), "E2 without p_g in ρ̄(χ₂) accepted");
  auto lit = smash_hopf_algebroid(fx::e1());
  lit.antipode = Mat::identity(3);
  need(check_hopf_algebroid(lit).passed(), "E1 with 𝒮=id accepted");
  auto swap = SetPartialAction(fx::z2(), 2, {{true, true}, {true, true}}, {{0, 1}, {1, 0}});
  need(check_set_partial_action(swap).passed(), "E1set with the swap accepted");
}

void criterion11() {
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 100; ++i) {
    auto spa = fx::random_set_action(rng);
    std::string at = "sample " + std::to_string(i) + ": ";
    need(check_set_partial_action(spa).passed(), at + "set action");
    auto pa = to_kG_partial_action(spa);
    need(check_partial_action(pa).passed(), at + "kG action");
    auto pc = to_dual_partial_coaction(spa);
    need(check_partial_coaction(pc).passed(), at + "(kG)* coaction");
    auto smash = smash_hopf_algebroid(pa);
    need(check_hopf_algebroid(smash).passed(), at + "smash algebroid");
    auto split = partial_split_hopf_algebroid(pc);
    need(check_hopf_algebroid(split).passed(), at + "split algebroid");
    need(groupoid_of_action(spa).arrow_count() == split.dim(), at + "arrows = dim A⊗̲K");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"smash Hopf algebroid of E1", criterion1},
      {"partial split Hopf algebroid of E2 and the global swap", criterion2},
      {"action/coaction round trips on E1, E2 and ℤ₃", criterion3},
      {"skew pairing of E2 and E1", criterion4},
      {"dual Kellendonk-Lawson on E1set and the swap", criterion5},
      {"C-ring of E3", criterion6},
      {"cosmash coproduct of E3*", criterion7},
      {"smash/cosmash pairing of E1 and E3*", criterion8},
      {"group/kG correspondence on E3 and ℤ₃", criterion9},
      {"negative suite", criterion10},
      {"100 random set partial actions", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      why = f.what;
    } catch (const std::exception& e) {
      why = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", why.empty() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, why.empty() ? "" : ": ", why.c_str());
    if (!why.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
