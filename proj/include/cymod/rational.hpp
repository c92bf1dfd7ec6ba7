#pragma once

// Arbitrary-precision integers and rationals on top of GMP. The wrappers
// return plain values (no gmpxx expression templates) so they can be used
// as Eigen scalars.

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cymod {

class Integer {
 public:
  Integer() = default;
  Integer(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) : v_(v) {}

  static Integer parse(std::string_view text);

  const mpz_class& raw() const { return v_; }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  // Truncating division, like C++ integer division.
  Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
  Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  double to_double() const { return v_.get_d(); }
  // Non-negative residue modulo a positive machine integer.
  std::int64_t mod(std::int64_t m) const;
  bool divisible_by(const Integer& d) const { return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0; }

  std::string to_string() const { return v_.get_str(); }
  std::size_t hash() const { return std::hash<std::string>{}(to_string()); }

 private:
  mpz_class v_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& a, unsigned e);
bool is_probable_prime(const Integer& n);
// Prime factorization of |n| (n != 0) with multiplicities, ascending.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);
// Positive divisors of |n|, ascending. n != 0.
std::vector<Integer> divisors(const Integer& n);
// Square-free part of n, keeping the sign.
Integer squarefree_part(const Integer& n);
bool is_square(const Integer& n);
std::ostream& operator<<(std::ostream& os, const Integer& a);

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "n" or "n/d" with optional sign.
  static Rational parse(std::string_view text);

  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational inverse() const;
  double to_double() const { return v_.get_d(); }
  // Reduction into F_m; throws BadPrime when m divides the denominator.
  std::int64_t mod(std::int64_t m) const;

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

Rational abs(const Rational& a);
Rational pow(const Rational& a, int e);
std::ostream& operator<<(std::ostream& os, const Rational& a);

}  // namespace cymod

template <>
struct std::hash<cymod::Integer> {
  std::size_t operator()(const cymod::Integer& a) const { return a.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<cymod::Integer> : GenericNumTraits<cymod::Integer> {
  using Real = cymod::Integer;
  using NonInteger = cymod::Rational;
  using Literal = cymod::Integer;
  using Nested = cymod::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
};

template <>
struct NumTraits<cymod::Rational> : GenericNumTraits<cymod::Rational> {
  using Real = cymod::Rational;
  using NonInteger = cymod::Rational;
  using Literal = cymod::Rational;
  using Nested = cymod::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16,
  };
};

}  // namespace Eigen
