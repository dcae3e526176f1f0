#include "fixtures.hpp"

#include <algorithm>
#include <set>

namespace phopf::fx {

FiniteGroup z2() { return FiniteGroup::cyclic(2); }
HopfPackage kz2() { return group_algebra(z2()); }
HopfPackage kz2_dual() { return dual_group_hopf(z2()); }
AlgebraSC fun2() { return function_algebra(2); }
CoalgebraSC c2() { return grouplike_coalgebra(2, {"x1", "x2"}); }
Mat z2_pairing() { return canonical_group_pairing(z2()); }

SetPartialAction e1set() { return SetPartialAction(z2(), 2, {{true, true}, {true, false}}, {{0, 1}, {0, -1}}); }
PartialAction e1() { return to_kG_partial_action(e1set()); }
PartialCoaction e2() { return to_dual_partial_coaction(e1set()); }

PartialModuleCoalgebra e3() {
  Mat act(2, 4);
  act(0, 0) = 1;
  act(1, 1) = 1;
  act(0, 2) = 1;
  return PartialModuleCoalgebra(kz2(), c2(), act);
}

PartialComoduleCoalgebra e3star() {
  Mat lam(4, 2);
  lam(0, 0) = 1;
  lam(2, 0) = 1;
  lam(1, 1) = 1;
  return PartialComoduleCoalgebra(kz2_dual(), c2(), lam);
}

Mat e2_left() {
  Mat l(4, 2);
  l(0, 0) = 1;
  l(2, 0) = 1;
  l(1, 1) = 1;
  return l;
}

SetPartialAction swap_set() { return SetPartialAction::global(z2(), {{0, 1}, {1, 0}}); }
PartialAction swap_action() { return to_kG_partial_action(swap_set()); }
PartialCoaction swap_coaction() { return to_dual_partial_coaction(swap_set()); }

PartialAction broken_e1() {
  Mat act(2, 4);
  act(0, 0) = 1;
  act(1, 1) = 1;
  act(0, 2) = 1;
  act(1, 2) = 1;
  return PartialAction(kz2(), fun2(), act);
}

PartialAction matrixalg() {
  auto m = matrix_algebra(2);
  Mat act(4, 8);
  for (std::size_t a = 0; a < 4; ++a) {
    act(a, a) = 1;
    act(a, 4 + a) = 1;
  }
  return PartialAction(kz2(), m, act);
}

namespace {

SetPartialAction z3_rotation() {
  return SetPartialAction::global(FiniteGroup::cyclic(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

}  // namespace

SetPartialAction z3_restricted_set() {
  auto g = FiniteGroup::cyclic(3);
  auto full = z3_rotation();
  std::vector<std::vector<bool>> dom(3, std::vector<bool>(2, false));
  std::vector<std::vector<std::int64_t>> maps(3, std::vector<std::int64_t>(2, -1));
  for (std::size_t gi = 0; gi < 3; ++gi)
    for (std::size_t x = 0; x < 2; ++x) {
      auto y = static_cast<std::size_t>(full.alpha(gi, x));
      if (y < 2) maps[gi][x] = static_cast<std::int64_t>(y);
      auto pre = static_cast<std::size_t>(full.alpha(g.inv(gi), x));
      dom[gi][x] = pre < 2;
    }
  return SetPartialAction(g, 2, dom, maps);
}

PartialAction z3_action() {
  Vec e{Scalar(1), Scalar(1), Scalar(0)};
  return induced_partial_action(to_kG_partial_action(z3_rotation()), e);
}

PartialCoaction z3_coaction() {
  Vec e{Scalar(1), Scalar(1), Scalar(0)};
  return restricted_coaction(to_dual_partial_coaction(z3_rotation()), e);
}

PartialModuleCoalgebra z3_module_coalgebra() {
  auto g = FiniteGroup::cyclic(3);
  auto c = grouplike_coalgebra(3, {"x1", "x2", "x3"});
  auto rot = z3_rotation();
  Mat act(3, 9);
  for (std::size_t gi = 0; gi < 3; ++gi)
    for (std::size_t x = 0; x < 3; ++x) act(static_cast<std::size_t>(rot.alpha(gi, x)), gi * 3 + x) = 1;
  PartialModuleCoalgebra global(group_algebra(g), c, act);
  Mat p(3, 3);
  p(0, 0) = 1;
  p(1, 1) = 1;
  return induced_module_coalgebra(global, p);
}

SetPartialAction random_set_action(std::mt19937_64& rng) {
  static const std::vector<FiniteGroup> groups = {
      FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
      FiniteGroup::klein(),   FiniteGroup::cyclic(5), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)};
  const auto& g = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
  std::size_t n = g.order();

  // Y is a union of one or two coset spaces G/⟨a⟩.
  std::vector<std::vector<std::size_t>> cosets;  // cosets[y] as a sorted element list
  std::vector<std::size_t> orbit_start;
  std::size_t orbits = 1 + rng() % 2;
  for (std::size_t o = 0; o < orbits; ++o) {
    std::size_t a = rng() % n;
    std::set<std::size_t> sub{g.unit()};
    for (std::size_t x = a; x != g.unit(); x = g.mul(x, a)) sub.insert(x);
    std::set<std::vector<std::size_t>> seen;
    orbit_start.push_back(cosets.size());
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<std::size_t> c;
      for (auto s : sub) c.push_back(g.mul(u, s));
      std::sort(c.begin(), c.end());
      if (seen.insert(c).second) cosets.push_back(c);
    }
  }
  std::size_t ny = cosets.size();
  auto act = [&](std::size_t gi, std::size_t y) {
    std::vector<std::size_t> c;
    for (auto u : cosets[y]) c.push_back(g.mul(gi, u));
    std::sort(c.begin(), c.end());
    std::size_t lo = y < orbit_start.back() ? 0 : orbit_start.back();
    std::size_t hi = y < orbit_start.back() ? orbit_start.back() : ny;
    if (orbit_start.size() == 1) lo = 0, hi = ny;
    for (std::size_t z = lo; z < hi; ++z)
      if (cosets[z] == c) return z;
    return ny;
  };

  std::vector<std::size_t> ys(ny);
  for (std::size_t y = 0; y < ny; ++y) ys[y] = y;
  std::shuffle(ys.begin(), ys.end(), rng);
  std::size_t k = 1 + rng() % std::min<std::size_t>(5, ny);
  std::vector<std::size_t> x(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(x.begin(), x.end());
  auto pos = [&](std::size_t y) -> std::int64_t {
    auto it = std::find(x.begin(), x.end(), y);
    return it == x.end() ? -1 : it - x.begin();
  };

  std::vector<std::vector<bool>> dom(n, std::vector<bool>(k, false));
  std::vector<std::vector<std::int64_t>> maps(n, std::vector<std::int64_t>(k, -1));
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t i = 0; i < k; ++i) {
      maps[gi][i] = pos(act(gi, x[i]));
      dom[gi][i] = pos(act(g.inv(gi), x[i])) >= 0;
    }
  return SetPartialAction(g, k, dom, maps);
}

std::map<std::string, FixtureFile> fixture_files() {
  std::map<std::string, FixtureFile> out;
  auto base = [] {
    FixtureFile f;
    f.add("kZ2", kz2());
    f.add("A", fun2());
    return f;
  };
  {
    auto f = base();
    f.add("e1", e1());
    f.set_main("e1");
    out["e1.json"] = f;
  }
  {
    FixtureFile f;
    f.add("Z2", z2());
    f.add("e1set", e1set());
    f.set_main("e1set");
    out["e1set.json"] = f;
  }
  {
    auto f = base();
    f.add("kZ2*", kz2_dual());
    f.add("e2", e2());
    f.add("form", Pairing{"kZ2", "kZ2*", z2_pairing()});
    f.set_main("e2");
    out["e2.json"] = f;
  }
  {
    FixtureFile f;
    f.add("kZ2", kz2());
    f.add("C", c2());
    f.add("e3", e3());
    f.set_main("e3");
    out["e3.json"] = f;
  }
  {
    FixtureFile f;
    f.add("kZ2*", kz2_dual());
    f.add("A", fun2());
    f.add("C", c2());
    f.add("e3star", e3star());
    f.add("P", Pairing{"A", "C", Mat::identity(2)});
    f.set_main("e3star");
    out["e3star.json"] = f;
  }
  {
    FixtureFile f;
    f.add("kZ2", kz2());
    f.set_main("kZ2");
    out["kz2.json"] = f;
  }
  {
    auto f = base();
    f.add("broken_e1", broken_e1());
    f.set_main("broken_e1");
    out["broken_e1.json"] = f;
  }
  {
    FixtureFile f;
    f.add("kZ2", kz2());
    f.add("M2", matrix_algebra(2));
    f.add("matrixalg", matrixalg());
    f.set_main("matrixalg");
    out["matrixalg.json"] = f;
  }
  return out;
}

}  // namespace phopf::fx
