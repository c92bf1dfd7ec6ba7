#include "cymod/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

#include "cymod/errors.hpp"

namespace cymod {

namespace {

bool parse_integer_text(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(s, 10) == 0;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const mpz_class& v) { mpz_class w = v * v + c; return mpz_class(w % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class d = x - y;
          q = (q * abs(d)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = x - ys;
        g = gcd(mpz_class(abs(d)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  static const unsigned long kSmall = 10000;
  for (unsigned long p = 2; p <= kSmall && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[mpz_class(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  std::vector<mpz_class> stack{n};
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
      out[m]++;
      continue;
    }
    mpz_class d = pollard_brent(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  mpz_class v;
  if (!parse_integer_text(text, v))
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  return Integer(v);
}

long Integer::to_long() const {
  if (!fits_long()) throw Error(ErrorKind::InvalidArgument, "integer too large: " + to_string());
  return v_.get_si();
}

std::int64_t Integer::mod(std::int64_t m) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v_.get_mpz_t(), static_cast<unsigned long>(m));
  return static_cast<std::int64_t>(r.get_ui());
}

Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.raw()))); }
Integer gcd(const Integer& a, const Integer& b) { return Integer(mpz_class(::gcd(a.raw(), b.raw()))); }
Integer lcm(const Integer& a, const Integer& b) { return Integer(mpz_class(::lcm(a.raw(), b.raw()))); }

Integer pow(const Integer& a, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.raw().get_mpz_t(), e);
  return Integer(r);
}

bool is_probable_prime(const Integer& n) {
  return n.sign() > 0 && mpz_probab_prime_p(n.raw().get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
  if (n.is_zero()) throw Error(ErrorKind::InvalidArgument, "factorize(0)");
  std::map<mpz_class, int> f;
  factor_into(::abs(n.raw()), f);
  std::vector<std::pair<Integer, int>> out;
  for (const auto& [p, e] : f) out.emplace_back(Integer(p), e);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    Integer pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer squarefree_part(const Integer& n) {
  if (n.is_zero()) return n;
  Integer r(n.sign());
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) r *= p;
  return r;
}

bool is_square(const Integer& n) {
  return n.sign() >= 0 && mpz_perfect_square_p(n.raw().get_mpz_t()) != 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  Integer n = Integer::parse(text.substr(0, slash));
  std::string_view dtext = text.substr(slash + 1);
  if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
    throw Error(ErrorKind::ParseError, "signed denominator in '" + std::string(text) + "'");
  Integer d = Integer::parse(dtext);
  if (d.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

std::int64_t Rational::mod(std::int64_t m) const {
  Integer d = den();
  std::int64_t dm = d.mod(m);
  if (dm == 0)
    throw Error(ErrorKind::BadPrime, std::to_string(m) + " divides denominator of " + to_string());
  mpz_class inv;
  mpz_class mm(static_cast<long>(m));
  mpz_invert(inv.get_mpz_t(), mpz_class(static_cast<long>(dm)).get_mpz_t(), mm.get_mpz_t());
  mpz_class r = (num().raw() * inv) % mm;
  if (r < 0) r += mm;
  return static_cast<std::int64_t>(r.get_si());
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& a, int e) {
  if (e < 0) return pow(a.inverse(), -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(Integer(n), Integer(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

}  // namespace cymod
