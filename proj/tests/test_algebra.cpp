#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zinbiel/algebra.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;

TEST_CASE("null-filiform products follow the binomial table") {
  Algebra nf5 = build_null_filiform(5);
  // e2 o e2 = C(3,2) e4 = 3 e4
  Vec p = multiply(nf5, nf5.basis_vector(2), nf5.basis_vector(2));
  Vec want(5, Rational(0));
  want[3] = Rational(3);
  CHECK(p == want);
}

TEST_CASE("multiplying by zero gives zero") {
  Algebra nf4 = build_null_filiform(4);
  Vec zero(4, Rational(0));
  Rng rng(3);
  CHECK(is_zero_vec(multiply(nf4, zero, rng.rational_vector(4))));
}

TEST_CASE("Z1 at n=8 has e8 o e6 = e7") {
  Algebra z1 = build_entry({"Z1", 8, {}}).algebra;
  Vec p = multiply(z1, z1.basis_vector(8), z1.basis_vector(6));
  CHECK(p == z1.basis_vector(7));
}

TEST_CASE("multiply is bilinear on random rationals") {
  Algebra a = build_entry({"Z14", 8, {{"lambda", Rational(3)}}}).algebra;
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    Rational c1 = rng.rational(), c2 = rng.rational();
    Vec x = rng.rational_vector(8), xp = rng.rational_vector(8), y = rng.rational_vector(8);
    Vec lhs = multiply(a, c1 * x + c2 * xp, y);
    Vec rhs = c1 * multiply(a, x, y) + c2 * multiply(a, xp, y);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("defect vanishes on the null-filiform algebra") {
  Algebra nf8 = build_null_filiform(8);
  Vec e1 = nf8.basis_vector(1);
  CHECK(is_zero_vec(zinbiel_defect(nf8, e1, e1, e1)));
}

TEST_CASE("one-dimensional idempotent defect") {
  Algebra a(1);
  a.add_term(1, 1, 1, 1);
  Vec d = zinbiel_defect(a, a.basis_vector(1), a.basis_vector(1), a.basis_vector(1));
  CHECK(d == Vec{Rational(-1)});
}

TEST_CASE("Z21 at n=8 satisfies the identity on (e1,e6,e1)") {
  Algebra z = build_z21(8);
  CHECK(is_zero_vec(zinbiel_defect(z, z.basis_vector(1), z.basis_vector(6), z.basis_vector(1))));
}

TEST_CASE("null-filiform algebras satisfy the identity") {
  for (int n = 3; n <= 12; ++n) CHECK(is_zinbiel(build_null_filiform(n)));
}

TEST_CASE("witness reported lexicographically first") {
  Algebra a(2);
  a.add_term(1, 1, 1, 1);
  auto w = zinbiel_violation(a);
  REQUIRE(w.has_value());
  CHECK(w->i == 1);
  CHECK(w->j == 1);
  CHECK(w->k == 1);
}

TEST_CASE("identity surviving 100 random triples when basis check passes") {
  Algebra a = build_null_filiform(6);
  REQUIRE(is_zinbiel(a));
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    Vec x = rng.rational_vector(6), y = rng.rational_vector(6), z = rng.rational_vector(6);
    CHECK(is_zero_vec(zinbiel_defect(a, x, y, z)));
  }
}

TEST_CASE("left operator columns and additivity") {
  Algebra nf4 = build_null_filiform(4);
  Matrix l = left_operator(nf4, nf4.basis_vector(1));
  // chain e1 -> e2 -> e3 -> e4: ranks of powers 3, 2, 1, 0
  Matrix p = l;
  int expected[] = {3, 2, 1, 0};
  for (int k = 0; k < 4; ++k) {
    CHECK(rank(p) == expected[k]);
    p = p * l;
  }
  CHECK(is_zero_vec(left_operator(nf4, Vec(4, Rational(0))).row(0)));

  Rng rng(21);
  Vec x = rng.rational_vector(4), y = rng.rational_vector(4);
  CHECK(left_operator(nf4, x + y) == left_operator(nf4, x) + left_operator(nf4, y));
}

TEST_CASE("json round trip is structural") {
  Algebra a = build_entry({"Z9", 9, {{"alpha", Rational(2)}}}).algebra;
  Algebra b = algebra_from_json(to_json(a));
  CHECK(a == b);
  CHECK(a.label() == b.label());
}

TEST_CASE("json parser rejects malformed input") {
  CHECK_THROWS_AS(algebra_from_json("{"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "table": [], "extra": 1})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"table": []})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "table": [[1, 1, 1, "0"]]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "table": [[1, 1, 3, "1"]]})"),
                  DimensionMismatch);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"dim": 2, "table": [[1, 1, 2, "1"], [1, 1, 2, "2"]]})"), ParseError);
}
