#include "cymod/poly.hpp"

#include <algorithm>
#include <set>

namespace cymod {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  for (const auto& v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  int n = degree(), m = d.degree();
  if (n < m) return {Poly(), *this};
  std::vector<Rational> q(n - m + 1);
  Rational inv = d.lead().inverse();
  for (int k = n - m; k >= 0; --k) {
    Rational f = rem[k + m] * inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= m; ++j) rem[k + j] -= f * d.c_[j];
  }
  rem.resize(m);
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
  std::vector<Rational> r;
  for (int i = 1; i <= degree(); ++i) r.push_back(c_[i] * Rational(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

Poly Poly::pow(int e) const {
  Poly r = constant(Rational(1));
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::vector<Integer> Poly::primitive_integers() const {
  Integer l(1), g(0);
  for (const auto& v : c_) l = lcm(l, v.den());
  std::vector<Integer> out;
  for (const auto& v : c_) {
    out.push_back((v * Rational(l)).num());
    g = gcd(g, out.back());
  }
  if (!out.empty() && out.back().sign() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (!s.empty()) s += a.sign() < 0 ? " - " : " + ";
    else if (a.sign() < 0) s += "-";
    a = abs(a);
    if (i == 0 || a != Rational(1)) s += a.to_string() + (i > 0 ? "*" : "");
    if (i > 0) s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::set<Rational> roots;
  Poly g = f;
  if (g.degree() >= 1) g = g / gcd(g, g.derivative());
  if (g.coeff(0).is_zero()) {
    roots.insert(Rational(0));
    g = g / Poly::x();
  }
  if (g.degree() >= 1) {
    std::vector<Integer> a = g.primitive_integers();
    int n = g.degree();
    std::vector<Integer> ps = divisors(a[0]), qs = divisors(a[n]);
    for (const auto& q : qs)
      for (const auto& p0 : ps) {
        if (gcd(p0, q) != Integer(1)) continue;
        for (int s : {1, -1}) {
          Integer p = p0 * Integer(s);
          // q^n f(p/q) via homogeneous Horner
          Integer acc = a[n], qpow(1);
          for (int i = n - 1; i >= 0; --i) {
            qpow *= q;
            acc = acc * p + a[i] * qpow;
          }
          if (acc.is_zero()) roots.insert(Rational(p, q));
        }
      }
  }
  return {roots.begin(), roots.end()};
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  Poly a = f.monic();
  Poly b = gcd(a, a.derivative());
  Poly c = a / b;
  Poly d = a.derivative() / b - c.derivative();
  for (int k = 1; c.degree() >= 1; ++k) {
    Poly g = gcd(c, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    c = c / g;
    d = d / g - c.derivative();
  }
  return out;
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw Error(ErrorKind::InvalidArgument, "interpolate: size mismatch");
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(Rational(1));
    Rational den(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly::root(xs[j]);
      den *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / den);
  }
  return result;
}

}  // namespace cymod
