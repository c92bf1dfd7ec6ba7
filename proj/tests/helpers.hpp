#pragma once

#include <random>

#include "cymod/projective.hpp"

namespace testing_util {

using cymod::Integer;
using cymod::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 50) {
  long n = uniform(-bound, bound), d = uniform(1, bound);
  return Rational(Integer(n), Integer(d));
}

inline cymod::Moebius random_moebius(long bound = 9) {
  for (;;) {
    long a = uniform(-bound, bound), b = uniform(-bound, bound), c = uniform(-bound, bound), d = uniform(-bound, bound);
    if (a * d - b * c != 0) return cymod::Moebius(a, b, c, d);
  }
}

inline cymod::ProjPoint<Rational> rp(long n, long d = 1) {
  return cymod::ProjPoint<Rational>::finite(Rational(Integer(n), Integer(d)));
}
inline cymod::ProjPoint<Rational> rinf() { return cymod::ProjPoint<Rational>::infinity(Rational(0)); }

}  // namespace testing_util
