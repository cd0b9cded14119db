#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/matrix.hpp"

namespace zinbiel {

// Invertible change of basis; row i holds the coordinates of the new basis
// vector e'_i in the old basis.
class BasisChange {
 public:
  explicit BasisChange(Matrix m);
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return inv_; }
  BasisChange inverted() const { return BasisChange(inv_); }

 private:
  Matrix m_, inv_;
};

// Structure constants induced on the new basis: the unique table making the
// coordinate map an algebra isomorphism.
Algebra transport(const Algebra& a, const BasisChange& p);

// Six-parameter family member parameters (a1..a6), read positionally.
using FamilyParams = std::array<Rational, 6>;

// If the table is exactly a six-parameter family table at its dimension,
// returns the parameters.
std::optional<FamilyParams> family6_params(const Algebra& a);

// Generator images for a graded change of the six-parameter family:
//   e_1'     = P1 e_1 + Pn2 e_{n-2} + Pn e_n
//   e_{n-2}' = Q1 e_1 + Qn2 e_{n-2} + Qn e_n
//   e_n'     = R1 e_1 + Rn2 e_{n-2} + Rn e_n
// The admissible ones have Q1 = R1 = 0 plus the three conditions checked in
// admissible_generator_change.
struct GeneratorChange {
  Rational P1, Pn2, Pn;
  Rational Q1, Qn2, Qn;
  Rational R1, Rn2, Rn;
};

struct AppliedChange {
  BasisChange change;     // full n x n change, generators extended by the chain
  FamilyParams params;    // parameters read off the transported table
  Algebra transported;
};

struct RejectedChange {
  std::string violated;  // the restriction that failed, human-readable
};

using GeneratorChangeResult = std::variant<AppliedChange, RejectedChange>;

// Applies a generator change to a family member: checks the four
// restrictions exactly, extends the generators to a full basis via
// e'_{i+1} = e'_1 o e'_i and e'_{n-1} = e'_1 o e'_{n-2}, transports, and
// reads the induced parameters.
GeneratorChangeResult admissible_generator_change(const Algebra& a, const GeneratorChange& g);

// The closed-form images of the six parameters under an admissible change.
FamilyParams change_of_basis_formulas(const FamilyParams& a, const GeneratorChange& g);

// Subfamilies on which a given expression's nullity is invariant.  The
// cases are themselves invariant under admissible changes, so scope
// membership can be read off the raw parameters.
enum class ExprScope {
  EnInRightAnn,        // a3 = a6 = 0
  EnInRightAnnA5Zero,  // additionally a5 = 0
  EnInRightAnnA5A4Zero,
  EnNotInRightAnn,  // (a3, a6) != (0, 0)
};

// Polynomial in (a1..a6) whose vanishing is preserved by admissible changes
// within its scope.
struct InvariantExpr {
  std::string name;
  ExprScope scope;
  std::function<Rational(const FamilyParams&)> eval;

  bool in_scope(const FamilyParams& a) const;
};

// The expressions whose nullity separates subfamilies, with their scopes.
const std::vector<InvariantExpr>& invariant_exprs();

Rational delta_expr(const FamilyParams& a);

struct Counterexample {
  FamilyParams params;
  GeneratorChange change;
  std::string detail;
};

struct VerifyReport {
  std::string op;
  std::uint64_t seed = 0;
  int samples = 0;
  int passes = 0;
  int skipped = 0;
  std::vector<Counterexample> failures;
  std::string to_json() const;
};

// Samples admissible (params, change) pairs and checks the transported-table
// parameters against change_of_basis_formulas, exactly.  `formulas` can be
// overridden to demonstrate counterexample reporting.
VerifyReport verify_change_formulas(
    int samples, std::uint64_t seed, int dim = 8,
    const std::function<FamilyParams(const FamilyParams&, const GeneratorChange&)>& formulas =
        change_of_basis_formulas);

// For each scoped expression, samples admissible changes from matching
// subfamilies and checks that zero/nonzero status agrees before and after.
VerifyReport verify_nullity_invariants(int samples, std::uint64_t seed, int dim = 8);

struct SeparatedBy {
  std::string invariant;
  std::string detail;
};
struct NoIsoFound {
  long budget = 0;
};
struct IsoFound {
  BasisChange change;
};
using SeparationResult = std::variant<SeparatedBy, NoIsoFound, IsoFound>;

// Compares fingerprints, then scoped nullity patterns when both tables are
// family-form, then runs a seeded randomized search over admissible
// generator changes.  IsoFound is verified by exact transport equality.
SeparationResult separate_or_search(const Algebra& a, const Algebra& b, long budget,
                                    std::uint64_t seed);

std::string separation_to_json(const Algebra& a, const Algebra& b, const SeparationResult& r,
                               long budget, std::uint64_t seed);

}  // namespace zinbiel
