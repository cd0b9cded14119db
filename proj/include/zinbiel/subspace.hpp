#pragma once

#include <vector>

#include "zinbiel/matrix.hpp"

namespace zinbiel {

// Subspace of Q^n in canonical form: basis rows are the RREF of any spanning
// set, with zero rows dropped.  Two Subspace values are equal iff the spaces
// are equal, so operator== decides subspace equality.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  int ambient_;
  Matrix basis_;  // RREF, no zero rows
};

}  // namespace zinbiel
