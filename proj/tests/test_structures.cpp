#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "phopf/structures.hpp"

using namespace phopf;

namespace {

bool fails(const Report& r, const std::string& fragment) {
  for (const auto& a : r.axioms())
    if (a.verdict == Verdict::fail && a.id.find(fragment) != std::string::npos) return true;
  return false;
}

Vec basis(std::size_t n, std::size_t i) { return unit_vec(n, i); }

}  // namespace

TEST_CASE("group algebras") {
  auto t = group_algebra(FiniteGroup::trivial());
  CHECK(t.dim() == 1);
  CHECK(check_package(t, PackageLevel::hopf).passed());

  auto z2 = fx::kz2();
  CHECK(z2.dim() == 2);
  CHECK(z2.S() == Mat::identity(2));
  CHECK(check_package(z2, PackageLevel::hopf).passed());

  auto s3 = group_algebra(FiniteGroup::symmetric(3));
  CHECK(s3.dim() == 6);
  CHECK_FALSE(s3.algebra.is_commutative());
  CHECK(s3.coalgebra.is_cocommutative());
  CHECK(check_package(s3, PackageLevel::hopf).passed());
}

TEST_CASE("zero antipode fails the antipode law at δ_g") {
  auto z2 = fx::kz2();
  HopfPackage broken(z2.algebra, z2.coalgebra, Mat(2, 2));
  auto r = check_package(broken, PackageLevel::hopf);
  CHECK_FALSE(r.passed());
  const auto* a = r.find("S*id=ηε");
  REQUIRE(a);
  CHECK(a->verdict == Verdict::fail);
  CHECK(a->has_witness({1}));
  CHECK(check_package(broken, PackageLevel::bialgebra).passed());
}

TEST_CASE("dual group Hopf algebra of S3 matches the group table") {
  auto g = FiniteGroup::symmetric(3);
  auto k = dual_group_hopf(g);
  CHECK(check_package(k, PackageLevel::hopf).passed());
  std::size_t n = g.order();
  for (std::size_t w = 0; w < n; ++w) {
    SparseVec expect;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (g.mul(u, v) == w) expect[u * n + v] = Scalar(1);
    CHECK(k.coalgebra.coproduct(w) == expect);
    CHECK(k.coalgebra.counit()[w] == Scalar(w == g.unit() ? 1 : 0));
    CHECK(k.S().column(w) == basis(n, g.inv(w)));
    for (std::size_t u = 0; u < n; ++u) {
      SparseVec p;
      if (u == w) p[u] = Scalar(1);
      CHECK(k.algebra.product(u, w) == p);
    }
  }
}

TEST_CASE("dual of kZ2") {
  auto k = fx::kz2_dual();
  SparseVec expect{{0, Scalar(1)}, {3, Scalar(1)}};
  CHECK(k.coalgebra.coproduct(0) == expect);
  CHECK(k.names() == std::vector<std::string>{"p_e", "p_g"});
}

TEST_CASE("function algebras") {
  CHECK(function_algebra(1).dim() == 1);
  auto a = fx::fun2();
  CHECK(a.multiply(basis(2, 0), basis(2, 0)) == basis(2, 0));
  CHECK(is_zero(a.multiply(basis(2, 0), basis(2, 1))));
  auto r = check_algebra(function_algebra(5));
  CHECK(r.passed());
  CHECK(r.find("associativity")->instances == 125);
}

TEST_CASE("convolution") {
  auto z2 = fx::kz2();
  Mat id = Mat::identity(2);
  Mat ue = unit_counit(z2.coalgebra, z2.algebra);
  CHECK(convolution(id, ue, z2.coalgebra, z2.algebra) == id);
  CHECK(convolution(id, z2.S(), z2.coalgebra, z2.algebra) == ue);
  CHECK(convolution(z2.S(), id, z2.coalgebra, z2.algebra) == ue);
}

TEST_CASE("convolution is associative on random maps") {
  std::mt19937_64 rng(17);
  auto coalgebras = std::vector<CoalgebraSC>{fx::kz2().coalgebra, fx::kz2_dual().coalgebra,
                                             dual_group_hopf(FiniteGroup::cyclic(3)).coalgebra};
  for (const auto& c : coalgebras) {
    auto a = group_algebra(FiniteGroup::cyclic(c.dim() == 3 ? 3 : 2)).algebra;
    std::uniform_int_distribution<int> d(-3, 3);
    auto draw = [&] {
      Mat m(a.dim(), c.dim());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) m(i, j) = Scalar(d(rng));
      return m;
    };
    for (int t = 0; t < 5; ++t) {
      Mat f = draw(), g = draw(), h = draw();
      CHECK(convolution(convolution(f, g, c, a), h, c, a) == convolution(f, convolution(g, h, c, a), c, a));
    }
  }
}

TEST_CASE("pairings") {
  auto g = FiniteGroup::cyclic(3);
  auto form = canonical_group_pairing(g);
  CHECK(form == Mat::identity(3));
  CHECK(is_nondegenerate(form));
  CHECK(check_pairing(form, group_algebra(g), dual_group_hopf(g), PairingKind::hopf, true).passed());

  auto zero = check_pairing(Mat(3, 3), group_algebra(g), dual_group_hopf(g), PairingKind::hopf, false);
  CHECK(fails(zero, "⟨1,c⟩=ε(c)"));

  auto a = fx::fun2();
  CHECK(check_pairing(Mat::identity(2), a, dual_coalgebra(a), true).passed());
  CHECK_FALSE(check_pairing(Mat(2, 2), a, dual_coalgebra(a), true).passed());
}

TEST_CASE("partial representations") {
  auto h = fx::kz2();
  auto b = fx::fun2();
  Mat hom(2, 2);
  hom(0, 0) = 1, hom(1, 0) = 1, hom(0, 1) = 1, hom(1, 1) = -1;
  CHECK(check_partial_representation(hom, h, b).passed());

  Mat e(2, 2);
  e(0, 0) = 1, e(1, 0) = 1, e(0, 1) = 1;
  CHECK(check_partial_representation(e, h, b).passed());

  Mat bad = e;
  bad(0, 1) = 2;
  auto r = check_partial_representation(bad, h, b);
  const auto* first = r.first_failure();
  REQUIRE(first);
  CHECK(first->id == "PR2");
  CHECK(first->failures == 1);
  CHECK(first->has_witness({1, 1}));
}

TEST_CASE("op and cop") {
  auto a = fx::fun2();
  CHECK(a.opposite() == a);
  auto z2 = fx::kz2();
  CHECK(op_cop_transformers(z2, Transform::cop) == z2);

  auto s3 = group_algebra(FiniteGroup::symmetric(3));
  auto op = op_cop_transformers(s3, Transform::op);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(op.algebra.product(i, j) == s3.algebra.product(j, i));
  CHECK(check_package(op, PackageLevel::hopf).passed());
  CHECK(check_package(op_cop_transformers(s3, Transform::op_cop), PackageLevel::hopf).passed());
}
