#pragma once

// Points of P^1 over Q and Q(sqrt d), Moebius maps with integer entries,
// cross-ratios and the j-invariant of four points.

#include <Eigen/Core>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cymod/errors.hpp"
#include "cymod/quad.hpp"
#include "cymod/rational.hpp"

namespace cymod {

// Scalar embeddings used by generic code: lift(r, like) puts r into the field of `like`.
inline Rational lift(const Rational& r, const Rational&) { return r; }
inline QuadElem lift(const Rational& r, const QuadElem& like) { return QuadElem::embed(r, like.d()); }

template <class S>
class ProjPoint {
 public:
  ProjPoint(S u, S v) : u_(std::move(u)), v_(std::move(v)) { canonicalize(); }
  static ProjPoint infinity(const S& like) { return ProjPoint(lift(Rational(1), like), lift(Rational(0), like)); }
  static ProjPoint finite(const S& x) { return ProjPoint(x, lift(Rational(1), x)); }

  const S& u() const { return u_; }
  const S& v() const { return v_; }
  bool is_infinity() const { return v_.is_zero(); }
  const S& value() const {
    if (is_infinity()) throw Error(ErrorKind::InvalidArgument, "value() at infinity");
    return u_;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  // Sort key: infinity first, then by the finite value's ordering.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return a.is_infinity();
    return a.u_ < b.u_;
  }

 private:
  void canonicalize() {
    if (!v_.is_zero()) {
      u_ = u_ / v_;
      v_ = lift(Rational(1), v_);
    } else if (u_.is_zero()) {
      throw Error(ErrorKind::InvalidArgument, "(0:0) is not a point of P^1");
    } else {
      u_ = lift(Rational(1), u_);
    }
  }
  S u_, v_;
};

// Homogeneous 2x2 determinant [a,b] = a.u*b.v - a.v*b.u; works over any ring.
template <class P>
auto bracket(const P& a, const P& b) {
  return a.u() * b.v() - a.v() * b.u();
}

// A point of P^1 defined over Q or over one quadratic field. Points whose
// coordinates happen to be rational are always stored in the rational form.
class BasePoint {
 public:
  BasePoint(ProjPoint<Rational> p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  BasePoint(const ProjPoint<QuadElem>& p);                 // NOLINT(google-explicit-constructor)
  static BasePoint infinity() { return ProjPoint<Rational>::infinity(Rational(0)); }
  static BasePoint of(const Rational& x) { return ProjPoint<Rational>::finite(x); }
  static BasePoint of(const QuadElem& x) { return ProjPoint<QuadElem>::finite(x); }

  // "oo", "p/q" or "(a+b*sqrt(d))".
  static BasePoint parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<ProjPoint<Rational>>(p_); }
  bool is_infinity() const { return is_rational() && rational().is_infinity(); }
  const ProjPoint<Rational>& rational() const;
  const ProjPoint<QuadElem>& quad() const;
  // 0 for rational points, else the square-free d.
  long field() const { return is_rational() ? 0 : quad().u().d(); }
  // The point over Q(sqrt d); rational points are embedded.
  ProjPoint<QuadElem> in_field(long d) const;
  BasePoint conjugate() const;

  // Primitive integer binary form c_0 V^n + c_1 T V^{n-1} + ... + c_n T^n,
  // n = 1 or 2, whose zero set is this point and its conjugate.
  std::vector<Integer> min_form() const;

  std::string to_string() const;

  friend bool operator==(const BasePoint& a, const BasePoint& b) { return a.p_ == b.p_; }
  friend bool operator<(const BasePoint& a, const BasePoint& b);

 private:
  std::variant<ProjPoint<Rational>, ProjPoint<QuadElem>> p_;
};

std::ostream& operator<<(std::ostream& os, const BasePoint& p);

class Moebius {
 public:
  using Matrix = Eigen::Matrix<Integer, 2, 2>;

  Moebius() : Moebius(1, 0, 0, 1) {}
  Moebius(Integer m11, Integer m12, Integer m21, Integer m22);
  explicit Moebius(const Matrix& m) : Moebius(m(0, 0), m(0, 1), m(1, 0), m(1, 1)) {}
  static Moebius identity() { return Moebius(); }
  // Scales a rational matrix to primitive integers.
  static Moebius from_rational(const Eigen::Matrix<Rational, 2, 2>& m);
  // "[[a,b],[c,d]]".
  static Moebius parse(std::string_view text);

  const Matrix& matrix() const { return m_; }
  const Integer& operator()(int i, int j) const { return m_(i, j); }
  Integer det() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }
  bool is_identity() const { return *this == Moebius(); }

  template <class S>
  ProjPoint<S> apply(const ProjPoint<S>& t) const {
    S a = lift(Rational(m_(0, 0)), t.u()), b = lift(Rational(m_(0, 1)), t.u());
    S c = lift(Rational(m_(1, 0)), t.u()), d = lift(Rational(m_(1, 1)), t.u());
    return ProjPoint<S>(a * t.u() + b * t.v(), c * t.u() + d * t.v());
  }
  BasePoint apply(const BasePoint& t) const;

  Moebius inverse() const;
  friend Moebius operator*(const Moebius& a, const Moebius& b) { return Moebius(Matrix(a.m_ * b.m_)); }

  friend bool operator==(const Moebius& a, const Moebius& b) { return a.m_ == b.m_; }
  friend bool operator<(const Moebius& a, const Moebius& b);

  std::string to_string() const;
  // Rendering as a function of t, e.g. "(t-1)/(t-1089)", "9/(4t)", "1-t".
  std::string to_function_string() const;

 private:
  Matrix m_;
};

std::ostream& operator<<(std::ostream& os, const Moebius& m);

inline Moebius compose(const Moebius& m, const Moebius& n) { return m * n; }
inline Moebius invert(const Moebius& m) { return m.inverse(); }

// The map sending a1 -> 0, a2 -> 1, a3 -> oo; row-major 2x2 over the field.
template <class S>
std::array<S, 4> to_standard_frame(const ProjPoint<S>& a1, const ProjPoint<S>& a2, const ProjPoint<S>& a3) {
  S c1 = bracket(a2, a3), c2 = bracket(a2, a1);
  return {a1.v() * c1, -(a1.u() * c1), a3.v() * c2, -(a3.u() * c2)};
}

// Moebius map sending a_i -> b_i, returned only when it has rational entries.
std::optional<Moebius> moebius_through(const ProjPoint<QuadElem> (&a)[3], const ProjPoint<QuadElem> (&b)[3]);
std::optional<Moebius> moebius_through(const ProjPoint<Rational> (&a)[3], const ProjPoint<Rational> (&b)[3]);

template <class S>
S cross_ratio(const ProjPoint<S>& a, const ProjPoint<S>& b, const ProjPoint<S>& c, const ProjPoint<S>& d) {
  const ProjPoint<S>* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j]) throw Error(ErrorKind::DuplicatePoint, "cross-ratio needs four distinct points");
  return (bracket(a, c) * bracket(b, d)) / (bracket(a, d) * bracket(b, c));
}

template <class S>
S j_of_lambda(const S& lambda) {
  S one = lift(Rational(1), lambda);
  if (lambda.is_zero() || lambda == one) throw Error(ErrorKind::DegenerateLambda, "lambda in {0,1}");
  S q = lambda * lambda - lambda + one;
  S den = (lambda - one) * (lambda - one) * lambda * lambda;
  return q * q * q / den;
}

template <class S>
S j_of_points(const ProjPoint<S>& a, const ProjPoint<S>& b, const ProjPoint<S>& c, const ProjPoint<S>& d) {
  return j_of_lambda(cross_ratio(a, b, c, d));
}

}  // namespace cymod
