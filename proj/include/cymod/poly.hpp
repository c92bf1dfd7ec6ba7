#pragma once

// Univariate polynomials over Q, with the exact root and factor tools the
// singular-locus computation and the twist searches need.

#include <string>
#include <utility>
#include <vector>

#include "cymod/projective.hpp"
#include "cymod/rational.hpp"

namespace cymod {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);  // low degree first
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }
  // x - r
  static Poly root(const Rational& r) { return Poly({-r, Rational(1)}); }
  static Poly from_integers(const std::vector<Integer>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const;
  Poly monic() const;
  Poly pow(int e) const;

  template <class T>
  T operator()(const T& x) const {
    T acc = lift(Rational(0), x);
    for (int i = degree(); i >= 0; --i) acc = acc * x + lift(c_[i], x);
    return acc;
  }

  // Coefficients scaled to coprime integers with positive leading term.
  std::vector<Integer> primitive_integers() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic, or zero

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& f);

// Yun's algorithm: f = lead * prod_k g_k^k with g_k monic, square-free and
// pairwise coprime. Only non-constant g_k are returned.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Unique polynomial of degree < n through n points with distinct xs.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace cymod
