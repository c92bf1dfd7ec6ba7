#include "cymod/quad.hpp"

#include <cmath>
#include <ostream>

#include "cymod/errors.hpp"

namespace cymod {

QuadElem::QuadElem(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d == 0 || d == 1 || squarefree_part(Integer(d)) != Integer(d))
    throw Error(ErrorKind::InvalidArgument, "quadratic field needs square-free d != 0,1, got " +
                                                std::to_string(d));
}

void QuadElem::check_field(const QuadElem& o) const {
  if (d_ != o.d_)
    throw Error(ErrorKind::FieldMismatch,
                "Q(sqrt " + std::to_string(d_) + ") vs Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_field(o);
  Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero in Q(sqrt d)");
  return QuadElem(a_ / n, -b_ / n, d_);
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check_field(o);
  return *this *= o.inverse();
}

double QuadElem::to_double() const {
  if (d_ < 0) throw Error(ErrorKind::InvalidArgument, "complex quadratic element has no real value");
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadElem::to_string() const {
  std::string s = "(" + a_.to_string();
  s += b_.sign() < 0 ? "-" : "+";
  s += abs(b_).to_string() + "*sqrt(" + std::to_string(d_) + "))";
  return s;
}

QuadElem QuadElem::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::ParseError, "bad quadratic element '" + std::string(text) + "'");
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw fail();
  std::string_view body = text.substr(1, text.size() - 2);
  auto star = body.find("*sqrt(");
  if (star == std::string_view::npos || body.back() != ')') throw fail();
  std::string_view head = body.substr(0, star);
  // split head into a and signed b at the last sign not at position 0
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;)
    if (head[i] == '+' || head[i] == '-') {
      cut = i;
      break;
    }
  if (cut == std::string_view::npos) throw fail();
  Rational a = Rational::parse(head.substr(0, cut));
  Rational b = Rational::parse(head.substr(cut + 1));
  if (head[cut] == '-') b = -b;
  std::string_view dtext = body.substr(star + 6, body.size() - star - 7);
  long d = Integer::parse(dtext).to_long();
  return QuadElem(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

}  // namespace cymod
