#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/matrix.hpp"

namespace zinbiel {

// Finite-dimensional algebra over Q given by structure constants:
// e_i o e_j = sum_k c_{ij}^k e_k, indices 1-based.  Zero products are not
// stored; an absent (i, j) row means e_i o e_j = 0.
class Algebra {
 public:
  using Row = std::vector<std::pair<int, Rational>>;  // (k, c), k ascending

  explicit Algebra(int dim, std::string label = "") : dim_(dim), label_(std::move(label)) {}

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Sets e_i o e_j; zero coefficients are dropped, an all-zero row is erased.
  void set_product(int i, int j, Row comps);
  void add_term(int i, int j, int k, const Rational& c);

  const Row& product(int i, int j) const;  // empty row if absent
  Rational coefficient(int i, int j, int k) const;
  const std::map<std::pair<int, int>, Row>& table() const { return table_; }

  Vec basis_vector(int i) const;

  // Tables compared entry-wise; labels do not participate.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void check_indices(int i, int j, int k) const;

  int dim_;
  std::string label_;
  std::map<std::pair<int, int>, Row> table_;
};

// Bilinear extension of the table.
Vec multiply(const Algebra& a, const Vec& x, const Vec& y);

// (x o y) o z - x o (y o z) - x o (z o y); zero iff the triple satisfies the
// defining identity.
Vec zinbiel_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

struct ZinbielWitness {
  int i = 0, j = 0, k = 0;  // first failing basis triple, lexicographic
  Vec defect;
};

// Checks the identity on all dim^3 basis triples (sufficient by
// trilinearity).  Returns the first failing triple on failure.
std::optional<ZinbielWitness> zinbiel_violation(const Algebra& a);
bool is_zinbiel(const Algebra& a);

// Matrix of y -> x o y in the canonical basis (column j = coords of x o e_j).
Matrix left_operator(const Algebra& a, const Vec& x);
// Matrix of x -> x o y.
Matrix right_operator(const Algebra& a, const Vec& y);

// JSON file format: {"dim": n, "label": str, "table": [[i, j, k, "c"], ...]},
// coefficients as exact rational strings.  Unknown keys are rejected.
std::string to_json(const Algebra& a);
Algebra algebra_from_json(const std::string& text);

}  // namespace zinbiel
