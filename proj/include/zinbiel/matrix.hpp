#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);

// Dense matrix of rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> grid);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[r * cols_ + c]; }

  Vec row(int r) const;
  void set_row(int r, const Vec& v);

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // Matrix-on-the-left action on a coordinate column: (M v)_i.
  Vec apply(const Vec& v) const;
  // Row vector times matrix: (v M)_j.
  Vec apply_left(const Vec& v) const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  Matrix matrix;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Unique reduced row echelon form, exact Gauss-Jordan.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

Rational determinant(const Matrix& m);

// Inverse of a square matrix; throws SingularMatrixError.
Matrix inverse(const Matrix& m);

// Basis of the kernel {x : Mx = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);

struct LinearSolution {
  Vec particular;  // one solution with free variables set to zero
  int nullity = 0;
};

// Solves M x = rhs.  nullopt means inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& rhs);

}  // namespace zinbiel
