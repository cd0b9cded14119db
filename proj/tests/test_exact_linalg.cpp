#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zinbiel/matrix.hpp"
#include "zinbiel/sampling.hpp"
#include "zinbiel/subspace.hpp"

using namespace zinbiel;

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/2").str() == "-3/2");
  CHECK(Rational(10, 5).str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("scalar arithmetic is exact on random rationals") {
  Rng rng(42);
  for (int t = 0; t < 1000; ++t) {
    Rational a = rng.rational(50), b = rng.rational(50);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rref of proportional rows") {
  RrefResult r = rref(Matrix{{2, 4}, {1, 2}});
  CHECK(r.rank == 1);
  CHECK(r.matrix == Matrix{{1, 2}, {0, 0}});
}

TEST_CASE("rref of identity") {
  RrefResult r = rref(Matrix::identity(3));
  CHECK(r.rank == 3);
  CHECK(r.matrix == Matrix::identity(3));
}

TEST_CASE("rref three rows rank two") {
  // hand Gaussian elimination: rows reduce to e1, e2
  RrefResult r = rref(Matrix{{0, 1}, {1, 0}, {1, 1}});
  CHECK(r.rank == 2);
  CHECK(r.matrix == Matrix{{1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("rref is idempotent on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    int rows = 1 + static_cast<int>(rng.below(5)), cols = 1 + static_cast<int>(rng.below(5));
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(5);
    Matrix once = rref(m).matrix;
    CHECK(rref(once).matrix == once);
  }
}

TEST_CASE("solve_linear inconsistent system") {
  // beta1 + beta2 = -1, 2 beta1 + beta2 = -3, 3 beta1 + beta2 = -6
  Matrix m{{1, 1}, {2, 1}, {3, 1}};
  Vec rhs{Rational(-1), Rational(-3), Rational(-6)};
  CHECK_FALSE(solve_linear(m, rhs).has_value());
}

TEST_CASE("solve_linear unique and underdetermined") {
  auto s = solve_linear(Matrix{{1}}, Vec{Rational(5)});
  REQUIRE(s.has_value());
  CHECK(s->particular == Vec{Rational(5)});
  CHECK(s->nullity == 0);

  auto u = solve_linear(Matrix{{1, 1}}, Vec{Rational(1)});
  REQUIRE(u.has_value());
  CHECK(u->nullity == 1);
  CHECK(u->particular[0] + u->particular[1] == Rational(1));
}

TEST_CASE("consistent solutions reproduce the rhs exactly") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    int rows = 1 + static_cast<int>(rng.below(4)), cols = 1 + static_cast<int>(rng.below(4));
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(5);
    Vec x(cols);
    for (auto& v : x) v = rng.rational(5);
    Vec rhs = m.apply(x);
    auto s = solve_linear(m, rhs);
    REQUIRE(s.has_value());
    CHECK(m.apply(s->particular) == rhs);
  }
}

TEST_CASE("subspace span basics") {
  Subspace s = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)},
                                  {Rational(2), Rational(0), Rational(0)}});
  CHECK(s.dim() == 1);
  CHECK(s.basis().row(0) == Vec{Rational(1), Rational(0), Rational(0)});

  CHECK(Subspace::span(2, {}).dim() == 0);

  Subspace t = Subspace::span(4, {{Rational(1), Rational(1), Rational(0), Rational(0)},
                                  {Rational(0), Rational(1), Rational(1), Rational(0)},
                                  {Rational(1), Rational(0), Rational(-1), Rational(0)}});
  CHECK(t.dim() == 2);  // third vector = first - second
}

TEST_CASE("span is order-insensitive") {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> vs;
    for (int k = 0; k < 4; ++k) vs.push_back(rng.rational_vector(5, 4));
    Subspace a = Subspace::span(5, vs);
    std::swap(vs[0], vs[3]);
    std::swap(vs[1], vs[2]);
    CHECK(a == Subspace::span(5, vs));
  }
}

TEST_CASE("subspace membership, sum, intersection") {
  Subspace a = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
  Subspace b = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)}});
  CHECK(a.contains(Vec{Rational(3), Rational(0), Rational(0)}));
  CHECK_FALSE(a.contains(Vec{Rational(0), Rational(1), Rational(0)}));
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.intersect(b).dim() == 0);
  Subspace c = Subspace::span(3, {{Rational(1), Rational(1), Rational(0)},
                                  {Rational(0), Rational(0), Rational(1)}});
  Subspace d = a.sum(b).intersect(c);
  CHECK(d.dim() == 1);
  CHECK(d.contains(Vec{Rational(1), Rational(1), Rational(0)}));
}

TEST_CASE("kernel, inverse, determinant") {
  Matrix m{{1, 2}, {2, 4}};
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero_vec(m.apply(k[0])) );
  CHECK(determinant(m).is_zero());
  CHECK_THROWS_AS(inverse(m), SingularMatrixError);

  Matrix g{{2, 1}, {1, 1}};
  CHECK(determinant(g) == Rational(1));
  CHECK(g * inverse(g) == Matrix::identity(2));
}
