#pragma once

#include <cstdint>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

// splitmix64: tiny deterministic generator, identical output on every
// platform for a given seed (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, m).
  std::uint64_t below(std::uint64_t m) { return next() % m; }

  long intin(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Rational with numerator in [-h, h] and denominator in [1, h].
  Rational rational(long h = 7) { return Rational(intin(-h, h), intin(1, h)); }

  Rational nonzero_rational(long h = 7) {
    for (;;) {
      Rational r = rational(h);
      if (!r.is_zero()) return r;
    }
  }

  std::vector<Rational> rational_vector(int len, long h = 7) {
    std::vector<Rational> v;
    v.reserve(len);
    for (int i = 0; i < len; ++i) v.push_back(rational(h));
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace zinbiel
