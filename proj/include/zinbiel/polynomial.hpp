#pragma once

#include <map>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

// Interned symbol names for polynomial unknowns.
class SymbolTable {
 public:
  int intern(const std::string& name);
  int lookup(const std::string& name) const;  // -1 when absent
  const std::string& name(int id) const { return names_[id]; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
};

// Monomial = sorted symbol ids with multiplicity; empty = constant term.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial over Q.  Degrees stay tiny here (products
// of two unknown-laden table entries give degree two).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  static Poly symbol(int id);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  int degree() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Replaces the given symbols by constants.
  Poly substitute(const std::map<int, Rational>& assignment) const;
  Rational evaluate(const std::map<int, Rational>& full_assignment) const;

  // Coefficient view of a degree <= 1 polynomial: (constant, linear coeffs).
  bool is_linear() const { return degree() <= 1; }
  Rational linear_coefficient(int id) const;
  Rational constant_term() const;

  std::string str(const SymbolTable& symbols) const;

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace zinbiel
