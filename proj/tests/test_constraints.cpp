#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/constraints.hpp"
#include "zinbiel/errors.hpp"

using namespace zinbiel;

TEST_CASE("polynomial arithmetic") {
  SymbolTable st;
  int x = st.intern("x"), y = st.intern("y");
  Poly p = Poly::symbol(x) + Poly(Rational(2));
  Poly q = Poly::symbol(y) - Poly(Rational(1));
  Poly prod = p * q;
  CHECK(prod.degree() == 2);
  std::map<int, Rational> at{{x, Rational(3)}, {y, Rational(5)}};
  CHECK(prod.evaluate(at) == Rational(20));
  CHECK((p - p).is_zero());
  Poly lin = p.substitute({{x, Rational(1)}});
  CHECK(lin.is_constant());
  CHECK(lin.constant_value() == Rational(3));
  CHECK(p.str(st) == "2 + x");
  CHECK((Poly::symbol(x) * Poly::symbol(y)).str(st) == "x*y");
}

TEST_CASE("abelian template yields no equations") {
  GradedTemplate t(3, {1, 2, 3});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) t.set_known(i, j, {});
  ConstraintSystem cs = generate_constraints(t, {{Rule::Zinbiel, 1, 1, 1},
                                                 {Rule::Zinbiel, 1, 2, 3},
                                                 {Rule::Zinbiel, 3, 2, 1}});
  CHECK(cs.equations.empty());
}

TEST_CASE("solvable toy system is not a refutation") {
  GradedTemplate t(4, {1, 1, 2, 3});
  t.set_known(1, 1, {});
  t.set_known(1, 2, {{3, Rational(1)}});
  t.set_known(1, 3, {{4, Rational(1)}});
  t.set_known(1, 4, {});
  t.declare_slot(2, 1, {{3, "beta1"}});
  ConstraintSystem cs = generate_constraints(t, {{Rule::Zinbiel, 1, 1, 2}});
  REQUIRE(cs.equations.size() == 1);
  CHECK(cs.equations[0].poly.str(cs.symbols) == "1 + beta1");
  CHECK(std::holds_alternative<Undetermined>(refute_linear(cs)));
}

TEST_CASE("type II template produces the displayed three-equation system") {
  RefutationReport rep = refute_case(NonexistenceCase::TypeII, 9);
  CHECK(rep.refuted);
  CHECK(rep.placements.size() == 6);  // e_n placements r = 1..6
  for (const PlacementReport& p : rep.placements) {
    CHECK(p.verdict == "inconsistent-linear-system");
    REQUIRE(p.equations.size() == 3);
    CHECK(p.equations[0].text == "1 + beta1 + beta2 = 0");
    CHECK(p.equations[1].text == "3 + 2*beta1 + beta2 = 0");
    CHECK(p.equations[2].text == "6 + 3*beta1 + beta2 = 0");
    REQUIRE(p.witness_triples.size() == 3);
    CHECK(p.witness_triples[0] == std::array<int, 3>{1, 2, 3});
    CHECK(p.witness_triples[1] == std::array<int, 3>{1, 2, 4});
    CHECK(p.witness_triples[2] == std::array<int, 3>{1, 2, 5});
  }
  CHECK_THROWS_AS(refute_case(NonexistenceCase::TypeII, 8), RangeError);
}

TEST_CASE("type III refutation forces a unit e5 coefficient") {
  RefutationReport rep = refute_case(NonexistenceCase::TypeIII, 7);
  CHECK(rep.refuted);
  CHECK(rep.placements.size() == 3);  // s = 1..3
  for (const PlacementReport& p : rep.placements) {
    CHECK(p.verdict == "inconsistent-linear-system");
    bool has_sigma = false, has_one_plus_sigma = false;
    for (const EquationView& e : p.equations) {
      if (e.text == "sigma = 0") has_sigma = true;
      if (e.text == "1 + sigma = 0" && e.component == 5) has_one_plus_sigma = true;
    }
    CHECK(has_sigma);
    CHECK(has_one_plus_sigma);
  }
  CHECK_THROWS_AS(refute_case(NonexistenceCase::TypeIII, 6), RangeError);
}

TEST_CASE("chain-first cases are refuted by unreachable layers at n=8") {
  for (auto c : {NonexistenceCase::TypeI_R1Ge3, NonexistenceCase::TypeI_R1Eq2,
                 NonexistenceCase::TypeI_R2Ge4}) {
    RefutationReport rep = refute_case(c, 8);
    CHECK(rep.refuted);
    for (const PlacementReport& p : rep.placements) CHECK(p.verdict == "layer-unreachable");
  }
  // the r1 >= 3 case also holds from dimension 7 on
  CHECK(refute_case(NonexistenceCase::TypeI_R1Ge3, 7).refuted);
}

TEST_CASE("refutation reports are stable across runs") {
  std::string a = refute_case(NonexistenceCase::TypeII, 9).to_json();
  std::string b = refute_case(NonexistenceCase::TypeII, 9).to_json();
  CHECK(a == b);
}

TEST_CASE("four-parameter template forces the displayed vanishing set") {
  for (int n : {8, 9}) {
    GradedTemplate t = family4_template(n);
    ConstraintSystem cs = generate_constraints(t, family4_identity_triples(n));
    std::vector<Equation> eqs = cs.equations;
    Propagation prop = propagate_linear(eqs, &t);
    CHECK_FALSE(prop.inconsistent);
    for (const char* name : {"alpha1", "alpha2", "delta1", "delta2", "delta3", "delta4", "delta5",
                             "delta6"}) {
      int id = cs.symbols.lookup(name);
      REQUIRE(id >= 0);
      REQUIRE(prop.forced.count(id) == 1);
      CHECK(prop.forced.at(id).is_zero());
    }
    for (const char* name : {"beta1", "beta2", "gamma1", "gamma2"}) {
      int id = cs.symbols.lookup(name);
      REQUIRE(id >= 0);
      CHECK(prop.forced.count(id) == 0);
    }
  }
}

TEST_CASE("four-parameter system vanishes on compatible members") {
  const int n = 8;
  GradedTemplate t = family4_template(n);
  ConstraintSystem cs = generate_constraints(t, family4_identity_triples(n));
  for (auto params : {std::array<Rational, 4>{2, 0, 0, 1}, std::array<Rational, 4>{1, 0, 1, 1},
                      std::array<Rational, 4>{0, 1, 1, 0}, std::array<Rational, 4>{0, 0, 1, 0}}) {
    Algebra a = build_family4(n, params);
    std::map<int, Rational> assignment;
    for (int id = 0; id < cs.symbols.size(); ++id) assignment[id] = Rational(0);
    auto put = [&](const char* name, int i, int j, int k) {
      assignment[cs.symbols.lookup(name)] = a.coefficient(i, j, k);
    };
    put("alpha1", n - 2, 1, 2);
    put("beta1", n - 2, 1, n - 1);
    put("gamma1", n - 2, 1, n);
    put("alpha2", n - 2, n - 2, 2);
    put("beta2", n - 2, n - 2, n - 1);
    put("gamma2", n - 2, n - 2, n);
    put("delta1", n - 2, n - 1, 3);
    put("delta2", n - 2, n, 3);
    put("delta3", n, 1, 3);
    put("delta4", n, n - 2, 3);
    put("delta5", n, n - 1, 4);
    put("delta6", n, n, 4);
    for (const Equation& e : cs.equations) CHECK(e.poly.evaluate(assignment).is_zero());
  }
}

TEST_CASE("six-parameter template forces the displayed vanishing set") {
  for (int n : {8, 9}) {
    GradedTemplate t = family6_template(n);
    ConstraintSystem cs = generate_constraints(t, family6_identity_triples(n));
    std::vector<Equation> eqs = cs.equations;
    Propagation prop = propagate_linear(eqs, &t);
    CHECK_FALSE(prop.inconsistent);
    for (const char* name : {"beta1", "beta5", "alpha1", "alpha3", "alpha5", "beta3", "gamma1",
                             "gamma2", "gamma3", "gamma4"}) {
      int id = cs.symbols.lookup(name);
      REQUIRE(id >= 0);
      REQUIRE(prop.forced.count(id) == 1);
      CHECK(prop.forced.at(id).is_zero());
    }
    // the six surviving coefficients stay free: they are the family parameters
    for (const char* name : {"alpha2", "alpha4", "alpha6", "beta2", "beta4", "beta6"}) {
      int id = cs.symbols.lookup(name);
      REQUIRE(id >= 0);
      CHECK(prop.forced.count(id) == 0);
    }
  }
}

TEST_CASE("generated equations vanish on compatible catalog algebras") {
  const int n = 8;
  // six-parameter family members against the matching template system
  GradedTemplate t6 = family6_template(n);
  ConstraintSystem cs6 = generate_constraints(t6, family6_identity_triples(n));
  for (auto params : {std::array<Rational, 6>{1, 0, 0, 0, 1, 0},
                      std::array<Rational, 6>{Rational(2, 3), 1, Rational(-1), 0, 5, 7}}) {
    Algebra a = build_family6(n, params);
    std::map<int, Rational> assignment;
    for (int id = 0; id < cs6.symbols.size(); ++id) {
      // symbol names record their slot as u<i>_<j>_e<k> except the named ones
      assignment[id] = Rational(0);
    }
    auto put = [&](const char* name, int i, int j, int k) {
      assignment[cs6.symbols.lookup(name)] = a.coefficient(i, j, k);
    };
    put("alpha1", n - 2, 1, 2);
    put("alpha2", n - 2, 1, n - 1);
    put("alpha3", n - 2, n - 2, 2);
    put("alpha4", n - 2, n - 2, n - 1);
    put("alpha5", n - 2, n, 2);
    put("alpha6", n - 2, n, n - 1);
    put("beta1", n, 1, 2);
    put("beta2", n, 1, n - 1);
    put("beta3", n, n - 2, 2);
    put("beta4", n, n - 2, n - 1);
    put("beta5", n, n, 2);
    put("beta6", n, n, n - 1);
    put("gamma1", n - 2, 2, 3);
    put("gamma2", n - 2, n - 1, 3);
    put("gamma3", n, 2, 3);
    put("gamma4", n, n - 1, 3);
    for (const Equation& e : cs6.equations) CHECK(e.poly.evaluate(assignment).is_zero());
  }
}

TEST_CASE("case token parsing round-trips") {
  for (auto c : {NonexistenceCase::TypeI_R1Ge3, NonexistenceCase::TypeI_R1Eq2,
                 NonexistenceCase::TypeI_R2Ge4, NonexistenceCase::TypeII,
                 NonexistenceCase::TypeIII}) {
    auto parsed = parse_nonexistence_case(nonexistence_case_name(c));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK_FALSE(parse_nonexistence_case("bogus").has_value());
}
