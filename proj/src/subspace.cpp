#include "zinbiel/subspace.hpp"

#include "zinbiel/errors.hpp"

namespace zinbiel {

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw DimensionMismatch("spanning vector length != ambient dimension");
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(vectors, ambient_dim));
  Matrix b(r.rank, ambient_dim);
  for (int i = 0; i < r.rank; ++i) b.set_row(i, r.matrix.row(i));
  s.basis_ = b;
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("contains: length mismatch");
  // Reduce v by the RREF basis; v is in the span iff the residue is zero.
  Vec w = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int p = 0;
    while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
    if (p == ambient_ || w[p].is_zero()) continue;
    Rational f = w[p];
    for (int c = p; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
  }
  return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("sum: ambient mismatch");
  std::vector<Vec> rows;
  for (int r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
  for (int r = 0; r < other.basis_.rows(); ++r) rows.push_back(other.basis_.row(r));
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("intersect: ambient mismatch");
  // x in both spans iff x = u A = w B; solve [A^T | -B^T] kernel.
  int da = dim(), db = other.dim();
  if (da == 0 || db == 0) return Subspace(ambient_);
  Matrix m(ambient_, da + db);
  for (int i = 0; i < ambient_; ++i) {
    for (int j = 0; j < da; ++j) m.at(i, j) = basis_.at(j, i);
    for (int j = 0; j < db; ++j) m.at(i, da + j) = -other.basis_.at(j, i);
  }
  std::vector<Vec> gens;
  for (const Vec& k : kernel_basis(m)) {
    Vec x(ambient_, Rational(0));
    for (int j = 0; j < da; ++j)
      if (!k[j].is_zero())
        for (int c = 0; c < ambient_; ++c) x[c] += k[j] * basis_.at(j, c);
    gens.push_back(std::move(x));
  }
  return span(ambient_, gens);
}

}  // namespace zinbiel
