#pragma once

// Homogeneous polynomials in x, y, z over a field, and the cubic invariants
// used to classify pencil members.

#include <array>
#include <string>
#include <vector>

#include "cymod/errors.hpp"
#include "cymod/projective.hpp"

namespace cymod {

template <class S>
class TernaryForm {
 public:
  TernaryForm(int degree, const S& zero) : n_(degree), c_(size(degree), zero), zero_(zero) {}

  // Number of monomials of degree n.
  static int size(int n) { return (n + 1) * (n + 2) / 2; }
  // Monomials are listed x^n, x^{n-1}y, x^{n-1}z, x^{n-2}y^2, ... (lex in x, then y).
  static int index(int n, int i, int j) {
    int a = n - i;  // total degree in y, z
    return a * (a + 1) / 2 + (a - j);
  }

  static TernaryForm monomial(int i, int j, int k, const S& coeff, const S& zero) {
    TernaryForm f(i + j + k, zero);
    f.at(i, j, k) = coeff;
    return f;
  }

  int degree() const { return n_; }
  const S& zero() const { return zero_; }
  S& at(int i, int j, int k) { check(i, j, k); return c_[index(n_, i, j)]; }
  const S& at(int i, int j, int k) const { check(i, j, k); return c_[index(n_, i, j)]; }
  const std::vector<S>& coeffs() const { return c_; }

  template <class F>
  void for_each(F&& f) const {
    for (int i = n_; i >= 0; --i)
      for (int j = n_ - i; j >= 0; --j) f(i, j, n_ - i - j, c_[index(n_, i, j)]);
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  TernaryForm& operator+=(const TernaryForm& o) {
    same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TernaryForm& operator-=(const TernaryForm& o) {
    same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TernaryForm& operator*=(const S& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(TernaryForm a, const S& s) { return a *= s; }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm r(a.n_ + b.n_, a.zero_);
    a.for_each([&](int i, int j, int k, const S& x) {
      if (x.is_zero()) return;
      b.for_each([&](int i2, int j2, int k2, const S& y) {
        if (!y.is_zero()) r.at(i + i2, j + j2, k + k2) += x * y;
      });
    });
    return r;
  }
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  // Partial derivative in variable 0 (x), 1 (y) or 2 (z).
  TernaryForm partial(int var) const {
    if (n_ == 0) return TernaryForm(0, zero_);
    TernaryForm r(n_ - 1, zero_);
    for_each([&](int i, int j, int k, const S& x) {
      int e[3] = {i, j, k};
      if (e[var] == 0 || x.is_zero()) return;
      S f = x * lift(Rational(e[var]), zero_);
      e[var]--;
      r.at(e[0], e[1], e[2]) += f;
    });
    return r;
  }

  S operator()(const S& x, const S& y, const S& z) const {
    S acc = zero_;
    for_each([&](int i, int j, int k, const S& c) {
      if (c.is_zero()) return;
      S t = c;
      for (int a = 0; a < i; ++a) t *= x;
      for (int a = 0; a < j; ++a) t *= y;
      for (int a = 0; a < k; ++a) t *= z;
      acc += t;
    });
    return acc;
  }

  template <class T, class F>
  TernaryForm<T> map(F&& f, const T& zero) const {
    TernaryForm<T> r(n_, zero);
    for_each([&](int i, int j, int k, const S& c) { r.at(i, j, k) = f(c); });
    return r;
  }

  std::string to_string() const {
    std::string s;
    const char* names = "xyz";
    for_each([&](int i, int j, int k, const S& c) {
      if (c.is_zero()) return;
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      int e[3] = {i, j, k};
      for (int v = 0; v < 3; ++v)
        if (e[v] > 0) s += std::string("*") + names[v] + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    });
    return s.empty() ? "0" : s;
  }

 private:
  void check(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i + j + k != n_)
      throw Error(ErrorKind::InvalidArgument, "monomial degree mismatch");
  }
  void same_degree(const TernaryForm& o) const {
    if (o.n_ != n_) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
  }
  int n_;
  std::vector<S> c_;
  S zero_;
};

using RatForm = TernaryForm<Rational>;

inline RatForm rat_form(int degree) { return RatForm(degree, Rational(0)); }
inline RatForm rat_monomial(int i, int j, int k, const Rational& c = Rational(1)) {
  return RatForm::monomial(i, j, k, c, Rational(0));
}

// Symmetric coefficient tensor of a cubic: T[a][b][c] = coefficient / multinomial.
template <class S>
std::array<std::array<std::array<S, 3>, 3>, 3> cubic_tensor(const TernaryForm<S>& f) {
  if (f.degree() != 3) throw Error(ErrorKind::InvalidArgument, "cubic form expected");
  std::array<std::array<std::array<S, 3>, 3>, 3> t;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        int e[3] = {0, 0, 0};
        e[a]++, e[b]++, e[c]++;
        int multinomial = 6;
        for (int v : e) multinomial /= (v == 3 ? 6 : (v == 2 ? 2 : 1));
        t[a][b][c] = f.at(e[0], e[1], e[2]) * lift(Rational(1, multinomial), f.zero());
      }
  return t;
}

// Aronhold's degree-4 invariant of a ternary cubic, by the standard
// epsilon contraction. A singular cubic is a nodal/reducible cycle exactly
// when this is nonzero; it vanishes on cuspidal and worse members.
template <class S>
S aronhold_s(const TernaryForm<S>& f) {
  auto t = cubic_tensor(f);
  // nonzero epsilon entries
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  static const int signs[6] = {1, 1, 1, -1, -1, -1};
  S total = f.zero();
  // e(i1 j1 k1) e(i2 j2 l1) e(i3 k2 l2) e(j3 k3 l3)
  for (int p1 = 0; p1 < 6; ++p1) {
    int i1 = perms[p1][0], j1 = perms[p1][1], k1 = perms[p1][2];
    for (int p2 = 0; p2 < 6; ++p2) {
      int i2 = perms[p2][0], j2 = perms[p2][1], l1 = perms[p2][2];
      for (int p3 = 0; p3 < 6; ++p3) {
        int i3 = perms[p3][0], k2 = perms[p3][1], l2 = perms[p3][2];
        for (int p4 = 0; p4 < 6; ++p4) {
          int j3 = perms[p4][0], k3 = perms[p4][1], l3 = perms[p4][2];
          int s = signs[p1] * signs[p2] * signs[p3] * signs[p4];
          const S& a = t[i1][i2][i3];
          const S& b = t[j1][j2][j3];
          const S& c = t[k1][k2][k3];
          const S& d = t[l1][l2][l3];
          if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) continue;
          S term = a * b * c * d;
          if (s > 0) total += term;
          else total -= term;
        }
      }
    }
  }
  return total;
}

// Hessian determinant of a form (degree 3(n-2)).
template <class S>
TernaryForm<S> hessian(const TernaryForm<S>& f) {
  TernaryForm<S> d[3] = {f.partial(0), f.partial(1), f.partial(2)};
  std::vector<TernaryForm<S>> h;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) h.push_back(d[a].partial(b));
  auto m = [&](int a, int b) -> const TernaryForm<S>& { return h[3 * a + b]; };
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Discriminant of a ternary cubic up to a nonzero constant factor: the
// determinant of the 6x6 system formed by the partials of F and of its
// Hessian in the basis of quadratic monomials.
Rational cubic_discriminant(const RatForm& f);

}  // namespace cymod
