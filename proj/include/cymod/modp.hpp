#pragma once

// Prime-field arithmetic, plane cubics over F_p and the per-pencil member
// histogram that all point counts derive from.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cymod/rational.hpp"
#include "cymod/ternary.hpp"

namespace cymod {

using i64 = std::int64_t;

inline i64 mod_add(i64 a, i64 b, i64 p) { i64 r = a + b; return r >= p ? r - p : r; }
inline i64 mod_sub(i64 a, i64 b, i64 p) { i64 r = a - b; return r < 0 ? r + p : r; }
inline i64 mod_mul(i64 a, i64 b, i64 p) { return (a * b) % p; }
i64 mod_pow(i64 a, i64 e, i64 p);
i64 mod_inv(i64 a, i64 p);

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 bound);  // primes p < bound

// Kronecker symbol (d / p) for a prime p; 0 when p | d.
int kronecker(const Integer& d, i64 p);

// Points of P^1(F_p) are indexed 0..p-1 for finite t and p for infinity.
struct P1Index {
  static i64 infinity(i64 p) { return p; }
  static i64 of(i64 u, i64 v, i64 p);  // (u:v) with not both zero
};

using Vec3 = std::array<i64, 3>;

// A plane cubic over F_p; coefficients in TernaryForm monomial order.
class CubicModP {
 public:
  CubicModP(std::array<i64, 10> c, i64 p) : c_(c), p_(p) {}
  static CubicModP reduce(const RatForm& f, i64 p);  // throws BadPrime on denominators

  i64 prime() const { return p_; }
  const std::array<i64, 10>& coeffs() const { return c_; }
  bool is_zero() const;

  i64 operator()(const Vec3& x) const;
  Vec3 gradient(const Vec3& x) const;
  // Coefficients c0..c3 of G(P + s*D) as a polynomial in s.
  std::array<i64, 4> restrict_to_line(const Vec3& pt, const Vec3& dir) const;

  // Brute force over all p^2 + p + 1 points of P^2(F_p).
  i64 count_points() const;
  // All singular points (canonical representatives) in P^2(F_p).
  std::vector<Vec3> singular_points() const;

  friend bool operator==(const CubicModP& a, const CubicModP& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  std::array<i64, 10> c_;
  i64 p_;
};

// member(t) = v*F0 - u*F1 for t = (u:v).
CubicModP pencil_member(const CubicModP& f0, const CubicModP& f1, i64 t_index);

// Canonical representatives of P^2(F_p): first nonzero coordinate is 1.
template <class F>
void for_each_plane_point(i64 p, F&& f) {
  f(Vec3{0, 0, 1});
  for (i64 y = 0; y < p; ++y) f(Vec3{0, 1, y});
  for (i64 y = 0; y < p; ++y)
    for (i64 z = 0; z < p; ++z) f(Vec3{1, y, z});
}

// Count and F_p-rational singular points of every member of a pencil, from a
// single pass over P^2(F_p).
struct MemberData {
  i64 count = 0;
  std::vector<Vec3> singular;
};

class PencilHistogram {
 public:
  PencilHistogram(const CubicModP& f0, const CubicModP& f1);
  i64 prime() const { return p_; }
  const MemberData& member(i64 t_index) const { return members_[t_index]; }

 private:
  i64 p_;
  std::vector<MemberData> members_;
};

// Local behaviour of one member, read off from its singular points and count.
enum class MemberKind { Smooth, Split, NonSplit, Additive };

struct MemberClass {
  MemberKind kind;
  int trace;  // a_t of the smooth fibre, or +-1 for multiplicative members
};

MemberClass classify_member(const CubicModP& g, const MemberData& data);

}  // namespace cymod
