#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/invariants.hpp"
#include "zinbiel/sampling.hpp"
#include "zinbiel/transform.hpp"

using namespace zinbiel;

namespace {
std::vector<int> dims_of(const std::vector<Subspace>& chain) {
  std::vector<int> d;
  for (const Subspace& s : chain) d.push_back(s.dim());
  return d;
}
}  // namespace

TEST_CASE("power series dims") {
  Algebra z1 = build_entry({"Z1", 8, {}}).algebra;
  CHECK(dims_of(power_series(z1)) == std::vector<int>{8, 5, 3, 2, 1, 0});

  CHECK(dims_of(power_series(build_null_filiform(5))) == std::vector<int>{5, 4, 3, 2, 1, 0});

  Algebra abelian(4, "abelian");
  CHECK(dims_of(power_series(abelian)) == std::vector<int>{4, 0});
}

TEST_CASE("non-nilpotent input is rejected") {
  Algebra a(1);
  a.add_term(1, 1, 1, 1);
  CHECK_THROWS_AS(power_series(a), NotNilpotentError);
}

TEST_CASE("nilindex values") {
  CHECK(nilindex(build_entry({"Z1", 8, {}}).algebra) == 5);
  CHECK(nilindex(build_null_filiform(5)) == 5);
  CHECK(nilindex(Algebra(4, "abelian")) == 1);
}

TEST_CASE("annihilators of NF3") {
  // products: e1e1=e2, e1e2=e3, e2e1=2e3
  Algebra nf3 = build_null_filiform(3);
  Annihilators ann = annihilators(nf3);
  Subspace e3 = Subspace::span(3, {nf3.basis_vector(3)});
  CHECK(ann.right == e3);
  CHECK(ann.left == e3);
  CHECK(ann.center == e3);
}

TEST_CASE("annihilators of the abelian algebra") {
  Algebra a(2, "abelian");
  Annihilators ann = annihilators(a);
  CHECK(ann.right.dim() == 2);
  CHECK(ann.left.dim() == 2);
  CHECK(ann.center.dim() == 2);
}

TEST_CASE("e_n lies in the center of Z21") {
  Algebra z = build_z21(8);
  CHECK(annihilators(z).center.contains(z.basis_vector(8)));
}

TEST_CASE("jordan blocks from rank profiles") {
  // rank profile (6,3,1,0): blocks (3,2,1)
  Matrix n(6, 6);
  // J3 + J2 + J1 in explicit nilpotent form
  n.at(0, 1) = Rational(1);
  n.at(1, 2) = Rational(1);
  n.at(3, 4) = Rational(1);
  CHECK(jordan_blocks_nilpotent(n).blocks == std::vector<int>{3, 2, 1});

  CHECK(jordan_blocks_nilpotent(Matrix(4, 4)).blocks == std::vector<int>{1, 1, 1, 1});

  Algebra z1 = build_entry({"Z1", 8, {}}).algebra;
  CHECK(jordan_blocks_nilpotent(left_operator(z1, z1.basis_vector(1))).blocks ==
        std::vector<int>{5, 2, 1});

  CHECK_THROWS_AS(jordan_blocks_nilpotent(Matrix::identity(2)), NotNilpotentError);
}

TEST_CASE("jordan blocks sum to the dimension") {
  Rng rng(5);
  for (const char* name : {"Z1", "Z5", "Z13", "Z21"}) {
    Algebra a = build_entry({name, 9, {}}).algebra;
    for (int t = 0; t < 5; ++t) {
      Vec x = rng.rational_vector(9);
      CharSequence cs = jordan_blocks_nilpotent(left_operator(a, x));
      int sum = 0;
      for (int b : cs.blocks) sum += b;
      CHECK(sum == 9);
    }
  }
}

TEST_CASE("characteristic sequences") {
  Algebra z1 = build_entry({"Z1", 8, {}}).algebra;
  CHECK(characteristic_sequence(z1, 32, 0).blocks == std::vector<int>{5, 2, 1});
  CHECK(characteristic_sequence(z1, 32, 12345).blocks == std::vector<int>{5, 2, 1});

  Algebra abelian(3, "abelian");
  CHECK(characteristic_sequence(abelian, 8, 0).blocks == std::vector<int>{1, 1, 1});

  CHECK(characteristic_sequence(build_null_filiform(6), 16, 0).blocks == std::vector<int>{6});
}

TEST_CASE("characteristic sequence is invariant under transport") {
  Rng rng(77);
  for (const char* name : {"Z1", "Z5", "Z21"}) {
    Algebra a = build_entry({name, 8, {}}).algebra;
    CharSequence base = characteristic_sequence(a, 16, 0);
    for (int t = 0; t < 20; ++t) {
      Matrix m(8, 8);
      do {
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j) m.at(i, j) = rng.rational(3);
      } while (rank(m) < 8);
      Algebra moved = transport(a, BasisChange(m));
      CHECK(characteristic_sequence(moved, 16, t) == base);
    }
  }
}

TEST_CASE("no test vectors means a degenerate input") {
  CHECK_THROWS_AS(characteristic_sequence(Algebra(0), 4, 0), DegenerateError);
}

TEST_CASE("char sequence comparison is lexicographic") {
  CharSequence a{{5, 2, 1}}, b{{5, 1, 1, 1}}, c{{3, 3}};
  CHECK(a > b);
  CHECK(b < a);
  CHECK(c == CharSequence{{3, 3}});
}

TEST_CASE("natural gradation layer dims") {
  Algebra z1 = build_entry({"Z1", 8, {}}).algebra;
  Gradation g1 = natural_gradation(z1);
  CHECK(g1.layer_dims == std::vector<int>{3, 2, 1, 1, 1});
  // layer 1 complement is spanned by e1, e6, e8
  CHECK(g1.layers[0] ==
        Subspace::span(8, {z1.basis_vector(1), z1.basis_vector(6), z1.basis_vector(8)}));

  CHECK(natural_gradation(build_z21(8)).layer_dims == std::vector<int>{2, 2, 2, 1, 1});

  Algebra abelian(2, "abelian");
  CHECK(natural_gradation(abelian).layer_dims == std::vector<int>{2});
}

TEST_CASE("graded table is graded and detects already-graded input") {
  for (const char* name : {"Z1", "Z18", "Z21"}) {
    Algebra a = build_entry({name, 8, {}}).algebra;
    GradedTable g = graded_table(a);
    CHECK(g.already_graded);  // catalog entries are naturally graded
    CHECK(is_zinbiel(g.graded));
    for (const auto& [ij, row] : g.graded.table()) {
      int want = g.gradation.layer_of[ij.first - 1] + g.gradation.layer_of[ij.second - 1];
      for (const auto& [k, c] : row) CHECK(g.gradation.layer_of[k - 1] == want);
    }
  }
}

TEST_CASE("graded table truncates a filtered but non-graded algebra") {
  // start from NF4 and shift e2 by e3: same filtration, no longer graded in
  // the adapted basis read off the powers
  Algebra nf4 = build_null_filiform(4);
  Matrix m = Matrix::identity(4);
  m.at(1, 2) = Rational(1);  // e2' = e2 + e3
  Algebra moved = transport(nf4, BasisChange(m));
  GradedTable g = graded_table(moved);
  CHECK_FALSE(g.already_graded);
  CHECK(is_zinbiel(g.graded));
  for (const auto& [ij, row] : g.graded.table()) {
    int want = g.gradation.layer_of[ij.first - 1] + g.gradation.layer_of[ij.second - 1];
    for (const auto& [k, c] : row) CHECK(g.gradation.layer_of[k - 1] == want);
  }
}

TEST_CASE("fingerprint separates Z1 from the null-filiform algebra") {
  Fingerprint a = fingerprint(build_entry({"Z1", 8, {}}).algebra, 16, 0);
  Fingerprint b = fingerprint(build_null_filiform(8), 16, 0);
  CHECK(a.nilindex == 5);
  CHECK(b.nilindex == 8);
  CHECK_FALSE(a == b);
}

TEST_CASE("fingerprint json has stable key order") {
  Fingerprint f = fingerprint(build_entry({"Z1", 8, {}}).algebra, 8, 0);
  std::string j = f.to_json();
  CHECK(j.find("power_dims") < j.find("nilindex"));
  CHECK(j.find("nilindex") < j.find("char_seq"));
  CHECK(f.to_json() == fingerprint(build_entry({"Z1", 8, {}}).algebra, 8, 0).to_json());
}

TEST_CASE("power dims strictly decrease for catalog algebras") {
  for (const char* name : {"Z2", "Z8", "Z12", "Z18", "Z21"}) {
    CatalogEntry e{name, 9, {}};
    if (std::string(name) == "Z8") e.params["lambda"] = Rational(2);
    auto chain = power_series(build_entry(e).algebra);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      CHECK(chain[i].dim() > chain[i + 1].dim());
  }
}
