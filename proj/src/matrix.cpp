#include "zinbiel/matrix.hpp"

#include "zinbiel/errors.hpp"

namespace zinbiel {

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> grid) {
  rows_ = static_cast<int>(grid.size());
  cols_ = rows_ ? static_cast<int>(grid.begin()->size()) : 0;
  e_.resize(rows_ * cols_);
  int r = 0;
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
    int c = 0;
    for (long x : row) at(r, c++) = Rational(x);
    ++r;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("row length mismatch");
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) p.at(i, j) += aik * bkj;
      }
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape mismatch");
  Matrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
  return s;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("apply: length mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Vec Matrix::apply_left(const Vec& v) const {
  if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("apply_left: length mismatch");
  Vec r(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[j] += v[i] * at(i, j);
  }
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.matrix;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rational inv = inverse(a.at(r, c));
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  Matrix a = m;
  int n = a.rows();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Rational inv = inverse(a.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c) * inv;
      for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) throw SingularMatrixError("matrix not invertible");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
  return inv;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Rational(1);
    for (int pr = 0; pr < r.rank; ++pr) v[r.pivot_cols[pr]] = -r.matrix.at(pr, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw DimensionMismatch("solve_linear: rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult r = rref(aug);
  for (int c : r.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular.assign(m.cols(), Rational(0));
  for (int pr = 0; pr < r.rank; ++pr) sol.particular[r.pivot_cols[pr]] = r.matrix.at(pr, m.cols());
  sol.nullity = m.cols() - r.rank;
  return sol;
}

}  // namespace zinbiel
