#include "cymod/modp.hpp"

#include "cymod/errors.hpp"

namespace cymod {

namespace {

constexpr int kExp[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                             {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

// Monomial order used by quadratic partials: x^2, xy, xz, y^2, yz, z^2.
constexpr int kExp2[6][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};

using Quad6 = std::array<i64, 6>;

int quad_index(int i, int j) { return TernaryForm<Rational>::index(2, i, j); }

std::array<Quad6, 3> partials(const std::array<i64, 10>& c, i64 p) {
  std::array<Quad6, 3> d{};
  for (int m = 0; m < 10; ++m) {
    if (c[m] == 0) continue;
    for (int v = 0; v < 3; ++v) {
      int e[3] = {kExp[m][0], kExp[m][1], kExp[m][2]};
      if (e[v] == 0) continue;
      i64 f = mod_mul(c[m], e[v] % p, p);
      e[v]--;
      int q = quad_index(e[0], e[1]);
      d[v][q] = mod_add(d[v][q], f, p);
    }
  }
  return d;
}

i64 eval_quad(const Quad6& q, const Vec3& x, i64 p) {
  i64 acc = 0;
  for (int m = 0; m < 6; ++m) {
    if (q[m] == 0) continue;
    i64 t = q[m];
    for (int v = 0; v < 3; ++v)
      for (int r = 0; r < kExp2[m][v]; ++r) t = mod_mul(t, x[v], p);
    acc = mod_add(acc, t, p);
  }
  return acc;
}

bool is_zero_vec(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

i64 mod_pow(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of 0 mod " + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> primes_up_to(i64 bound) {
  std::vector<i64> out;
  for (i64 n = 2; n < bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

int kronecker(const Integer& d, i64 p) {
  i64 r = d.mod(p);
  if (p == 2) {
    if (r == 0) return 0;
    i64 r8 = d.mod(8);
    return (r8 == 1 || r8 == 7) ? 1 : -1;
  }
  if (r == 0) return 0;
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

i64 P1Index::of(i64 u, i64 v, i64 p) {
  u %= p, v %= p;
  if (u < 0) u += p;
  if (v < 0) v += p;
  if (v == 0) {
    if (u == 0) throw Error(ErrorKind::InvalidArgument, "(0:0) in P^1(F_p)");
    return p;
  }
  return mod_mul(u, mod_inv(v, p), p);
}

CubicModP CubicModP::reduce(const RatForm& f, i64 p) {
  if (f.degree() != 3) throw Error(ErrorKind::InvalidArgument, "cubic expected");
  std::array<i64, 10> c{};
  for (int m = 0; m < 10; ++m) c[m] = f.coeffs()[m].mod(p);
  return CubicModP(c, p);
}

bool CubicModP::is_zero() const {
  for (i64 v : c_)
    if (v != 0) return false;
  return true;
}

i64 CubicModP::operator()(const Vec3& x) const {
  i64 pw[3][4];
  for (int v = 0; v < 3; ++v) {
    pw[v][0] = 1;
    for (int k = 1; k < 4; ++k) pw[v][k] = mod_mul(pw[v][k - 1], x[v], p_);
  }
  i64 acc = 0;
  for (int m = 0; m < 10; ++m) {
    if (c_[m] == 0) continue;
    i64 t = mod_mul(c_[m], mod_mul(pw[0][kExp[m][0]], mod_mul(pw[1][kExp[m][1]], pw[2][kExp[m][2]], p_), p_), p_);
    acc = mod_add(acc, t, p_);
  }
  return acc;
}

Vec3 CubicModP::gradient(const Vec3& x) const {
  auto d = partials(c_, p_);
  return {eval_quad(d[0], x, p_), eval_quad(d[1], x, p_), eval_quad(d[2], x, p_)};
}

std::array<i64, 4> CubicModP::restrict_to_line(const Vec3& pt, const Vec3& dir) const {
  std::array<i64, 4> out{};
  for (int m = 0; m < 10; ++m) {
    if (c_[m] == 0) continue;
    std::array<i64, 4> poly{c_[m], 0, 0, 0};
    int deg = 0;
    for (int v = 0; v < 3; ++v)
      for (int r = 0; r < kExp[m][v]; ++r) {
        // multiply by (pt[v] + s*dir[v])
        std::array<i64, 4> next{};
        for (int k = 0; k <= deg; ++k) {
          next[k] = mod_add(next[k], mod_mul(poly[k], pt[v], p_), p_);
          next[k + 1] = mod_add(next[k + 1], mod_mul(poly[k], dir[v], p_), p_);
        }
        poly = next;
        ++deg;
      }
    for (int k = 0; k < 4; ++k) out[k] = mod_add(out[k], poly[k], p_);
  }
  return out;
}

i64 CubicModP::count_points() const {
  i64 n = 0;
  for_each_plane_point(p_, [&](const Vec3& x) {
    if ((*this)(x) == 0) ++n;
  });
  return n;
}

std::vector<Vec3> CubicModP::singular_points() const {
  auto d = partials(c_, p_);
  std::vector<Vec3> out;
  for_each_plane_point(p_, [&](const Vec3& x) {
    if ((*this)(x) != 0) return;
    if (eval_quad(d[0], x, p_) == 0 && eval_quad(d[1], x, p_) == 0 && eval_quad(d[2], x, p_) == 0)
      out.push_back(x);
  });
  return out;
}

CubicModP pencil_member(const CubicModP& f0, const CubicModP& f1, i64 t_index) {
  const i64 p = f0.prime();
  i64 u = t_index == p ? 1 : t_index, v = t_index == p ? 0 : 1;
  std::array<i64, 10> c{};
  for (int m = 0; m < 10; ++m) c[m] = mod_sub(mod_mul(v, f0.coeffs()[m], p), mod_mul(u, f1.coeffs()[m], p), p);
  return CubicModP(c, p);
}

PencilHistogram::PencilHistogram(const CubicModP& f0, const CubicModP& f1) : p_(f0.prime()), members_(f0.prime() + 1) {
  const i64 p = p_;
  auto d0 = partials(f0.coeffs(), p), d1 = partials(f1.coeffs(), p);
  i64 base_points = 0;
  std::vector<std::pair<i64, Vec3>> base_singular;
  for_each_plane_point(p, [&](const Vec3& x) {
    i64 a = f0(x), b = f1(x);
    Vec3 g0{eval_quad(d0[0], x, p), eval_quad(d0[1], x, p), eval_quad(d0[2], x, p)};
    Vec3 g1{eval_quad(d1[0], x, p), eval_quad(d1[1], x, p), eval_quad(d1[2], x, p)};
    if (a == 0 && b == 0) {
      ++base_points;
      // members singular at a base point: v*g0 = u*g1
      if (is_zero_vec(g0) && is_zero_vec(g1))
        throw Error(ErrorKind::DegenerateFamily, "every pencil member is singular at a base point mod " +
                                                     std::to_string(p));
      std::optional<i64> t;
      if (is_zero_vec(g1)) t = p;
      else if (is_zero_vec(g0)) t = 0;
      else {
        int k = g1[0] != 0 ? 0 : (g1[1] != 0 ? 1 : 2);
        i64 lambda = mod_mul(g0[k], mod_inv(g1[k], p), p);
        bool parallel = true;
        for (int v = 0; v < 3; ++v)
          if (g0[v] != mod_mul(lambda, g1[v], p)) parallel = false;
        if (parallel) t = lambda;
      }
      if (t) base_singular.emplace_back(*t, x);
      return;
    }
    // x lies on the member t = (a : b) only
    i64 t = P1Index::of(a, b, p);
    i64 u = t == p ? 1 : t, v = t == p ? 0 : 1;
    MemberData& md = members_[t];
    ++md.count;
    bool singular = true;
    for (int k = 0; k < 3; ++k)
      if (mod_sub(mod_mul(v, g0[k], p), mod_mul(u, g1[k], p), p) != 0) singular = false;
    if (singular) md.singular.push_back(x);
  });
  for (auto& md : members_) md.count += base_points;
  for (const auto& [t, x] : base_singular) members_[t].singular.push_back(x);
}

MemberClass classify_member(const CubicModP& g, const MemberData& data) {
  const i64 p = g.prime();
  if (data.singular.empty()) {
    i64 a = p + 1 - data.count;
    if (a * a <= 4 * p) return {MemberKind::Smooth, static_cast<int>(a)};
    // conic plus line meeting in two conjugate points
    if (data.count == 2 * p + 2) return {MemberKind::NonSplit, -1};
    return {MemberKind::Additive, 0};
  }
  const Vec3& pt = data.singular.front();
  int k = pt[0] != 0 ? 0 : (pt[1] != 0 ? 1 : 2);
  Vec3 e1{}, e2{};
  int others[2], n = 0;
  for (int v = 0; v < 3; ++v)
    if (v != k) others[n++] = v;
  e1[others[0]] = 1;
  e2[others[1]] = 1;
  // lines through the node: directions e1 and s*e1 + e2
  int tangent = 0;
  auto check = [&](const Vec3& dir) {
    if (g.restrict_to_line(pt, dir)[2] == 0) ++tangent;
  };
  check(e1);
  for (i64 s = 0; s < p; ++s) check(Vec3{mod_add(mod_mul(s, e1[0], p), e2[0], p), mod_add(mod_mul(s, e1[1], p), e2[1], p),
                                         mod_add(mod_mul(s, e1[2], p), e2[2], p)});
  if (tangent == 2) return {MemberKind::Split, 1};
  if (tangent == 0) return {MemberKind::NonSplit, -1};
  return {MemberKind::Additive, 0};
}

}  // namespace cymod
