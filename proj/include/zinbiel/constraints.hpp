#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/polynomial.hpp"
#include "zinbiel/subspace.hpp"

namespace zinbiel {

// Product value with polynomial coefficients; index k-1 holds the
// e_k-component.
using SymVec = std::vector<Poly>;

// Identity used to expand a basis triple:
//   Zinbiel:        (a o b) o c - a o (b o c) - a o (c o b)
//   RightSymmetric: (a o b) o c - (a o c) o b   (a consequence of the first)
enum class Rule { Zinbiel, RightSymmetric };

struct Triple {
  Rule rule;
  int a, b, c;
};

struct Equation {
  Poly poly;  // normalized so the leading coefficient is positive
  Triple source;
  int component;  // basis index the identity was projected on
};

struct ConstraintSystem {
  SymbolTable symbols;
  std::vector<Equation> equations;
};

// Partially known multiplication table on a graded basis.  Products are
// known (constant), slotted (unknown symbols on the components the layer
// rule permits), or unresolved.
class GradedTemplate {
 public:
  GradedTemplate(int dim, std::vector<int> layers);

  int dim() const { return dim_; }
  int layer(int i) const { return layers_[i - 1]; }
  const std::vector<int>& layers() const { return layers_; }

  SymbolTable& symbols() { return symbols_; }
  const SymbolTable& symbols() const { return symbols_; }

  void set_known(int i, int j, const std::vector<std::pair<int, Rational>>& comps);
  // One fresh symbol per permitted component (layer(k) = layer(i)+layer(j)).
  // Component names come from `names` when given, else "<i>_<j>_e<k>".
  void declare_slot(int i, int j, const std::map<int, std::string>& names = {});
  // Slots every product that is still unresolved.
  void saturate();

  bool resolved(int i, int j) const;
  const SymVec& product(int i, int j) const;

  // Expands the rule on a basis triple over the current table.
  struct Expansion {
    SymVec value;
    std::map<std::pair<int, int>, Poly> unresolved;
  };
  Expansion expand(const Triple& t) const;

  // The expansion must contain exactly one unresolved product with a nonzero
  // constant coefficient; stores its forced value and returns its key.
  std::pair<int, int> resolve(const Triple& t);

  // Equations of a fully resolved triple, one per nonzero component.
  std::vector<Equation> equations_for(const Triple& t) const;

  // Pins symbols to constants everywhere in the table.
  void substitute(const std::map<int, Rational>& assignment);

  // Upper bound on the span of products from layer la times layer lb, over
  // every assignment of the remaining unknowns.
  struct SpanBound {
    Subspace span;
    std::vector<std::string> notes;  // one line per contributing product
  };
  SpanBound product_span_upper_bound(int la, int lb) const;

 private:
  void check_layer_rule(int i, int j, const SymVec& v) const;

  int dim_;
  std::vector<int> layers_;
  SymbolTable symbols_;
  std::vector<std::optional<SymVec>> table_;  // (i-1)*dim + (j-1)
};

// Expands each triple and records one equation per nonzero projection.
ConstraintSystem generate_constraints(const GradedTemplate& t, const std::vector<Triple>& triples);

struct LinearRefutation {
  std::vector<Equation> witness;  // minimal inconsistent subset, greedy
};
struct Undetermined {};
using RefutationOutcome = std::variant<LinearRefutation, Undetermined>;

// Feeds the degree <= 1 equations to the exact solver.  Undetermined means
// the linear stratum alone does not refute.
RefutationOutcome refute_linear(const ConstraintSystem& cs);

// Iterated linear propagation: solves the current linear stratum, pins every
// symbol forced to a single value, substitutes, and repeats until nothing new
// is forced (quadratics participate once substitution makes them linear).
struct Propagation {
  std::map<int, Rational> forced;
  bool inconsistent = false;
};
Propagation propagate_linear(std::vector<Equation>& eqs, GradedTemplate* t = nullptr);

// Templates for the two naturally graded strata that do carry algebras;
// exposed for identity-system checks against the catalog.
GradedTemplate family6_template(int n);  // e_{n-2}, e_n both in layer 1
GradedTemplate family4_template(int n);  // e_{n-2} in layer 1, e_n in layer 2
std::vector<Triple> family6_identity_triples(int n);
std::vector<Triple> family4_identity_triples(int n);

enum class NonexistenceCase {
  TypeI_R1Ge3,  // e_{n-2} in layer r1 >= 3, e_n in layer 1
  TypeI_R1Eq2,  // e_{n-2} in layer 2, e_n in layer 1
  TypeI_R2Ge4,  // e_{n-2} in layer 1, e_n in layer r2 >= 4
  TypeII,       // left-multiplication blocks ordered J2, J_{n-3}, J1
  TypeIII,      // blocks ordered J1, J_{n-3}, J2
};

std::optional<NonexistenceCase> parse_nonexistence_case(const std::string& token);
std::string nonexistence_case_name(NonexistenceCase c);

struct EquationView {
  std::string text;
  Triple source;
  int component;
  std::map<std::string, std::string> coeffs;  // symbol (or "const") -> value
};

struct PlacementReport {
  std::string description;  // generator layer placement tried
  std::string verdict;      // "inconsistent-linear-system" or "layer-unreachable"
  std::vector<EquationView> equations;
  std::vector<std::array<int, 3>> witness_triples;
  std::string detail;
  bool refuted = false;
};

struct RefutationReport {
  std::string case_name;
  int dim = 0;
  std::vector<PlacementReport> placements;
  bool refuted = false;  // every placement refuted
  std::string to_json() const;
};

// Reproduces the nonexistence argument for the case at dimension n, running
// every admissible layer placement.  Throws RangeError below the case's
// dimension floor.
RefutationReport refute_case(NonexistenceCase c, int n);

}  // namespace zinbiel
