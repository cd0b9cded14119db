#include "zinbiel/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "zinbiel/errors.hpp"

namespace zinbiel {

int SymbolTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(names_.size());
  names_.push_back(name);
  ids_[name] = id;
  return id;
}

int SymbolTable::lookup(const std::string& name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

Poly::Poly(Rational c) {
  if (!c.is_zero()) terms_[{}] = std::move(c);
}

Poly Poly::symbol(int id) {
  Poly p;
  p.terms_[{id}] = Rational(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw ParseError("constant_value of non-constant polynomial");
  return constant_term();
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      p.add_term(std::move(m), ca * cb);
    }
  return p;
}

Poly Poly::operator-() const {
  Poly p;
  for (const auto& [m, c] : terms_) p.terms_[m] = -c;
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  Poly p;
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_[m] = c * v;
  return p;
}

Poly Poly::substitute(const std::map<int, Rational>& assignment) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest;
    for (int id : m) {
      auto it = assignment.find(id);
      if (it == assignment.end())
        rest.push_back(id);
      else
        coef *= it->second;
    }
    if (!coef.is_zero()) out.add_term(std::move(rest), coef);
  }
  return out;
}

Rational Poly::evaluate(const std::map<int, Rational>& full) const {
  Poly p = substitute(full);
  if (!p.is_constant()) throw ParseError("evaluate: assignment does not cover all symbols");
  return p.constant_term();
}

Rational Poly::linear_coefficient(int id) const {
  auto it = terms_.find(Monomial{id});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Poly::str(const SymbolTable& symbols) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (!first)
      os << (a.sign() < 0 ? " - " : " + ");
    else if (a.sign() < 0)
      os << "-";
    if (a.sign() < 0) a = -a;
    first = false;
    bool coef_shown = !(a == Rational(1) && !m.empty());
    if (coef_shown) os << a.str();
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (coef_shown || t > 0) os << "*";
      os << symbols.name(m[t]);
    }
  }
  return os.str();
}

}  // namespace zinbiel
