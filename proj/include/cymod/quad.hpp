#pragma once

// Elements a + b*sqrt(d) of a quadratic field Q(sqrt d), d square-free, d != 0, 1.

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cymod/rational.hpp"

namespace cymod {

class QuadElem {
 public:
  QuadElem() = default;
  // Explicit embedding of Q (b = 0) or a full element of Q(sqrt d).
  QuadElem(Rational a, Rational b, long d);
  static QuadElem embed(const Rational& a, long d) { return QuadElem(a, Rational(0), d); }
  static QuadElem sqrt(long d) { return QuadElem(Rational(0), Rational(1), d); }

  // "(a+b*sqrt(d))" exactly as rendered by to_string.
  static QuadElem parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  QuadElem conj() const { return QuadElem(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  Rational trace() const { return a_ + a_; }
  QuadElem inverse() const;
  double to_double() const;  // real fields only

  QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Lexicographic on (d, a, b); only meaningful as a sort key.
  friend std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y) {
    if (auto c = x.d_ <=> y.d_; c != 0) return c;
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  std::string to_string() const;

 private:
  void check_field(const QuadElem& o) const;
  Rational a_, b_;
  long d_ = -1;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace cymod
