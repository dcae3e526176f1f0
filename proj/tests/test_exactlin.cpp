#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "phopf/errors.hpp"
#include "phopf/linalg.hpp"
#include "phopf/scalar.hpp"

using namespace phopf;

namespace {

Mat mat(std::size_t cols, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> rs;
  for (auto r : rows) {
    Vec v;
    for (auto x : r) v.push_back(Scalar(x));
    rs.push_back(v);
  }
  return Mat::from_rows(cols, rs);
}

Vec vec(std::initializer_list<long long> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse("3/6").str() == "1/2");
  CHECK(Scalar::parse("-4/2").str() == "-2");
  CHECK(Scalar::parse("0").is_zero());
  CHECK_THROWS_AS(Scalar::parse("1/0"), SchemaError);
  CHECK_THROWS_AS(Scalar::parse("0.5"), SchemaError);
  CHECK_THROWS_AS(Scalar::parse(""), SchemaError);
  CHECK(Scalar::parse("1/2", Field::prime(7)).str() == "4");
  CHECK(Field::parse("Fp:7") == Field::prime(7));
  CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("scalar field axioms on random rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-50, 50);
  auto draw = [&] {
    long long den = 0;
    while (den == 0) den = d(rng);
    return Scalar(d(rng), den);
  };
  for (int i = 0; i < 200; ++i) {
    Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK((a * b).to_mpq() == a.to_mpq() * b.to_mpq());
  }
}

TEST_CASE("scalar overflow falls back to big rationals") {
  Scalar big(1LL << 62);
  Scalar sq = big * big;
  CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 124));
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(5);
  Scalar a = Scalar::in_field(3, f), b = Scalar::in_field(4, f);
  CHECK((a + b).str() == "2");
  CHECK((a * b).str() == "2");
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS_AS(Scalar::in_field(1, Field::prime(7)) + a, FieldMismatch);
  CHECK_THROWS_AS(Scalar::in_field(0, f).inverse(), DivisionByZero);
}

TEST_CASE("rref") {
  auto [r1, p1] = rref(Mat::identity(2));
  CHECK(r1 == Mat::identity(2));
  CHECK(p1 == std::vector<std::size_t>{0, 1});

  auto [r2, p2] = rref(mat(2, {{1, 2}, {2, 4}}));
  CHECK(r2 == mat(2, {{1, 2}, {0, 0}}));
  CHECK(p2 == std::vector<std::size_t>{0});
}

TEST_CASE("rref agrees with textbook elimination on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m = oracle::random_mat(rng, 5, 7);
    if (trial % 3 == 0)
      for (std::size_t j = 0; j < 7; ++j) m(4, j) = m(0, j) + m(1, j);
    auto [r, piv] = rref(m);
    auto g = oracle::grid(m);
    auto opiv = oracle::eliminate(g);
    CHECK(piv == opiv);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < 7; ++j) CHECK(r(i, j).to_mpq() == g[i][j]);
    CHECK(m.rank() == opiv.size());
  }
}

TEST_CASE("kernel and image") {
  Mat zero(2, 3);
  CHECK(kernel(zero).dim() == 3);
  CHECK(image(zero).dim() == 0);
  CHECK(kernel(Mat::identity(3)).dim() == 0);

  Mat ones = mat(2, {{1, 1}, {1, 1}});
  CHECK(kernel(ones) == Subspace::span(2, std::vector<Vec>{vec({1, -1})}));
  CHECK(image(ones) == Subspace::span(2, std::vector<Vec>{vec({1, 1})}));
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Mat m = oracle::random_mat(rng, r, c, 2);
    auto k = kernel(m);
    CHECK(k.dim() + oracle::rank(oracle::grid(m)) == c);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m.apply(k.basis_vector(i))));
  }
}

TEST_CASE("subspaces are canonical") {
  std::mt19937_64 rng(3);
  std::vector<Vec> vs = {vec({1, 2, 0, 1}), vec({0, 1, 1, 0}), vec({2, 5, 1, 2})};
  auto a = Subspace::span(4, vs);
  std::vector<Vec> mixed = {Scalar(3) * vs[1], vs[0] + vs[1], Scalar(-1) * vs[2]};
  CHECK(a == Subspace::span(4, mixed));
  CHECK(a.dim() == 2);
  CHECK(a.contains(vs[2]));
  CHECK_FALSE(a.contains(vec({0, 0, 0, 1})));
}

TEST_CASE("quotient spaces") {
  auto q0 = quotient_by(4, Subspace(4));
  CHECK(q0.dim() == 4);
  CHECK(q0.projection() == Mat::identity(4));

  auto q1 = quotient_by(2, Subspace::span(2, std::vector<Vec>{vec({1, -1})}));
  CHECK(q1.dim() == 1);
  CHECK(q1.project(vec({1, 0})) == q1.project(vec({0, 1})));

  // A⊗_A A for A = ℚ²: relations (e_a e_x)⊗e_y − e_x⊗(e_a e_y).
  std::vector<Vec> rels;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        Vec r = zeros(4);
        if (a == x) r[a * 2 + y] += Scalar(1);
        if (a == y) r[x * 2 + a] -= Scalar(1);
        rels.push_back(r);
      }
  CHECK(quotient_by(4, Subspace::span(4, rels)).dim() == 2);
}

TEST_CASE("quotient projection and section are inverse on the quotient") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 5;
    Mat gens = oracle::random_mat(rng, rng() % n, n, 2);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < gens.rows(); ++i) rows.push_back(gens.row(i));
    auto rel = Subspace::span(n, rows);
    auto q = quotient_by(n, rel);
    CHECK(q.dim() + rel.dim() == n);
    CHECK(q.projection() * q.section_matrix() == Mat::identity(q.dim()));
    for (const auto& r : rows) CHECK(is_zero(q.project(r)));
  }
}

TEST_CASE("solve and inverse") {
  Mat m = mat(2, {{2, 1}, {1, 1}});
  auto x = solve(m, vec({3, 2}));
  REQUIRE(x);
  CHECK(*x == vec({1, 1}));
  CHECK_FALSE(solve(mat(2, {{1, 1}, {1, 1}}), vec({1, 0})));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Mat::identity(2));
  CHECK_FALSE(inverse(mat(2, {{1, 2}, {2, 4}})));
}
