#include "zinbiel/rational.hpp"

#include <cctype>
#include <ostream>

namespace zinbiel {

Rational::Rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParseError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("bad rational literal: " + s);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ParseError("bad rational literal: " + s);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ParseError("bad rational literal: " + s);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(mpq_class(mpz_class(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator: " + s);
  return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

Rational inverse(const Rational& a) {
  if (a.is_zero()) throw ParseError("inverse of zero rational");
  return Rational(1) / a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

}  // namespace zinbiel
