#include "cymod/projective.hpp"

#include <ostream>
#include <sstream>

namespace cymod {

BasePoint::BasePoint(const ProjPoint<QuadElem>& p) : p_(p) {
  if (p.u().is_rational() && p.v().is_rational())
    p_ = ProjPoint<Rational>(p.u().a(), p.v().a());
}

const ProjPoint<Rational>& BasePoint::rational() const {
  if (!is_rational()) throw Error(ErrorKind::IrrationalLocation, to_string() + " is not Q-rational");
  return std::get<ProjPoint<Rational>>(p_);
}

const ProjPoint<QuadElem>& BasePoint::quad() const {
  if (is_rational()) throw Error(ErrorKind::InvalidArgument, to_string() + " is rational");
  return std::get<ProjPoint<QuadElem>>(p_);
}

ProjPoint<QuadElem> BasePoint::in_field(long d) const {
  if (!is_rational()) {
    if (quad().u().d() != d)
      throw Error(ErrorKind::FieldMismatch, to_string() + " is not in Q(sqrt " + std::to_string(d) + ")");
    return quad();
  }
  const auto& r = rational();
  return ProjPoint<QuadElem>(QuadElem::embed(r.u(), d), QuadElem::embed(r.v(), d));
}

BasePoint BasePoint::conjugate() const {
  if (is_rational()) return *this;
  return ProjPoint<QuadElem>(quad().u().conj(), quad().v().conj());
}

std::vector<Integer> BasePoint::min_form() const {
  std::vector<Rational> c;
  if (is_rational()) {
    const auto& r = rational();
    if (r.is_infinity()) return {Integer(1), Integer(0)};
    c = {-r.u(), Rational(1)};
  } else {
    const QuadElem& x = quad().u();
    c = {x.norm(), -x.trace(), Rational(1)};
  }
  Integer l(1);
  for (const auto& q : c) l = lcm(l, q.den());
  std::vector<Integer> out;
  Integer g(0);
  for (const auto& q : c) {
    out.push_back((q * Rational(l)).num());
    g = gcd(g, out.back());
  }
  for (auto& v : out) v /= g;
  return out;
}

std::string BasePoint::to_string() const {
  if (is_rational()) {
    const auto& r = rational();
    return r.is_infinity() ? "oo" : r.u().to_string();
  }
  return quad().u().to_string();
}

BasePoint BasePoint::parse(std::string_view text) {
  if (text == "oo") return infinity();
  if (!text.empty() && text.front() == '(') return of(QuadElem::parse(text));
  return of(Rational::parse(text));
}

bool operator<(const BasePoint& a, const BasePoint& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.rational() < b.rational();
  return a.quad() < b.quad();
}

std::ostream& operator<<(std::ostream& os, const BasePoint& p) { return os << p.to_string(); }

Moebius::Moebius(Integer m11, Integer m12, Integer m21, Integer m22) {
  Integer g = gcd(gcd(m11, m12), gcd(m21, m22));
  if (m11 * m22 - m12 * m21 == Integer(0))
    throw Error(ErrorKind::InvalidArgument, "singular Moebius matrix");
  Integer lead = !m11.is_zero() ? m11 : m12;
  if (lead.sign() < 0) g = -g;
  m_ << m11 / g, m12 / g, m21 / g, m22 / g;
}

Moebius Moebius::from_rational(const Eigen::Matrix<Rational, 2, 2>& m) {
  Integer l(1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) l = lcm(l, m(i, j).den());
  auto sc = [&](int i, int j) { return (m(i, j) * Rational(l)).num(); };
  return Moebius(sc(0, 0), sc(0, 1), sc(1, 0), sc(1, 1));
}

Moebius Moebius::inverse() const { return Moebius(m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0)); }

BasePoint Moebius::apply(const BasePoint& t) const {
  if (t.is_rational()) return apply(t.rational());
  return apply(t.quad());
}

bool operator<(const Moebius& a, const Moebius& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a.m_(i, j) != b.m_(i, j)) return a.m_(i, j) < b.m_(i, j);
  return false;
}

std::string Moebius::to_string() const {
  std::ostringstream os;
  os << "[[" << m_(0, 0) << "," << m_(0, 1) << "],[" << m_(1, 0) << "," << m_(1, 1) << "]]";
  return os.str();
}

Moebius Moebius::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  auto fail = [&] { return Error(ErrorKind::ParseError, "bad Moebius matrix '" + std::string(text) + "'"); };
  if (s.size() < 13 || s.rfind("[[", 0) != 0 || s.substr(s.size() - 2) != "]]") throw fail();
  std::string body = s.substr(2, s.size() - 4);
  auto mid = body.find("],[");
  if (mid == std::string::npos) throw fail();
  auto pair = [&](const std::string& p) {
    auto c = p.find(',');
    if (c == std::string::npos || p.find(',', c + 1) != std::string::npos) throw fail();
    return std::make_pair(Integer::parse(p.substr(0, c)), Integer::parse(p.substr(c + 1)));
  };
  auto [a, b] = pair(body.substr(0, mid));
  auto [c, d] = pair(body.substr(mid + 3));
  return Moebius(a, b, c, d);
}

namespace {

// Renders a*t + b.
std::string linear(const Integer& a, const Integer& b, bool& compound) {
  auto term = [](const Integer& c) {
    if (c == Integer(1)) return std::string("t");
    if (c == Integer(-1)) return std::string("-t");
    return c.to_string() + "t";
  };
  compound = false;
  if (a.is_zero()) return b.to_string();
  if (b.is_zero()) return term(a);
  compound = true;
  if (a.sign() > 0) return term(a) + (b.sign() > 0 ? "+" : "-") + abs(b).to_string();
  return b.to_string() + "-" + term(abs(a));
}

}  // namespace

std::string Moebius::to_function_string() const {
  Integer a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
  if (c.sign() < 0 || (c.is_zero() && d.sign() < 0)) {
    a = -a, b = -b, c = -c, d = -d;
  }
  bool cn = false, cd = false;
  std::string num = linear(a, b, cn);
  if (c.is_zero()) {
    if (d == Integer(1)) return num;
    return "(" + num + ")/" + d.to_string();
  }
  std::string den = linear(c, d, cd);
  if (cn) num = "(" + num + ")";
  if (cd || (d.is_zero() && c != Integer(1))) den = "(" + den + ")";
  return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const Moebius& m) { return os << m.to_string(); }

namespace {

template <class S>
std::array<S, 4> through(const ProjPoint<S> (&a)[3], const ProjPoint<S> (&b)[3]) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (a[i] == a[j] || b[i] == b[j]) throw Error(ErrorKind::DuplicatePoint, "three distinct points needed");
  auto ka = to_standard_frame(a[0], a[1], a[2]);
  auto kb = to_standard_frame(b[0], b[1], b[2]);
  // adj(kb) * ka
  return {kb[3] * ka[0] - kb[1] * ka[2], kb[3] * ka[1] - kb[1] * ka[3],
          kb[0] * ka[2] - kb[2] * ka[0], kb[0] * ka[3] - kb[2] * ka[1]};
}

}  // namespace

std::optional<Moebius> moebius_through(const ProjPoint<QuadElem> (&a)[3], const ProjPoint<QuadElem> (&b)[3]) {
  auto m = through(a, b);
  QuadElem lead = !m[0].is_zero() ? m[0] : m[1];
  Eigen::Matrix<Rational, 2, 2> r;
  for (int k = 0; k < 4; ++k) {
    QuadElem e = m[k] / lead;
    if (!e.is_rational()) return std::nullopt;
    r(k / 2, k % 2) = e.a();
  }
  return Moebius::from_rational(r);
}

std::optional<Moebius> moebius_through(const ProjPoint<Rational> (&a)[3], const ProjPoint<Rational> (&b)[3]) {
  auto m = through(a, b);
  Eigen::Matrix<Rational, 2, 2> r;
  r << m[0], m[1], m[2], m[3];
  return Moebius::from_rational(r);
}

}  // namespace cymod
