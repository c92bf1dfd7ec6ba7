#include "cymod/search.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cymod {

namespace {

using PolyPoint = std::pair<Poly, Poly>;

Poly pbr(const PolyPoint& a, const PolyPoint& b) { return a.first * b.second - a.second * b.first; }

PolyPoint poly_inf() { return {Poly::constant(1), Poly()}; }
PolyPoint poly_const(long c) { return {Poly::constant(c), Poly::constant(1)}; }
// (1 + 2s*x)^2 with s = +-1
PolyPoint poly_branch(int s) {
  Poly lin({Rational(1), Rational(2 * s)});
  return {lin * lin, Poly::constant(1)};
}

std::vector<BasePoint> locations(const FibrationSpec& spec) {
  std::vector<BasePoint> out;
  for (const auto& f : singular_locus(spec)) out.push_back(f.location);
  return out;
}

bool contains(const std::vector<BasePoint>& s, const BasePoint& p) { return std::find(s.begin(), s.end(), p) != s.end(); }

int common_count(const Moebius& m, const std::vector<BasePoint>& S, const std::vector<BasePoint>& S_prime) {
  int n = 0;
  for (const auto& a : S)
    if (contains(S_prime, m.apply(a))) ++n;
  return n;
}

long single_field(const std::vector<BasePoint>& s) {
  long d = 0;
  for (const auto& p : s) {
    if (p.field() == 0) continue;
    if (d != 0 && p.field() != d)
      throw Error(ErrorKind::IrrationalLocusUnsupported, "singular locus spans two quadratic fields");
    d = p.field();
  }
  return d;
}

// sqrt of a nonnegative or negative rational as an element of Q or Q(sqrt d).
struct Root {
  bool rational = true;
  Rational r;
  QuadElem q;
};
Root sqrt_of(const Rational& G) {
  Integer n = G.num() * G.den();
  Root out;
  if (is_square(n)) {
    Integer s = n.sign() == 0 ? Integer(0) : Integer(mpz_class(sqrt(abs(n).raw())));
    out.r = Rational(s, G.den());
    return out;
  }
  Integer d = squarefree_part(n);
  Integer s2 = n / d;
  Integer s(mpz_class(sqrt(s2.raw())));
  out.rational = false;
  out.q = QuadElem(Rational(0), Rational(s, G.den()), d.to_long());
  return out;
}

template <class S>
std::optional<S> eval_ratio(const Poly& n, const Poly& d, const S& x) {
  S dv = d(x);
  if (dv.is_zero()) return std::nullopt;
  return n(x) / dv;
}

template <class S>
std::optional<Rational> alpha_square(const Poly& nb, const Poly& db, const Poly& nd, const Poly& dd, const S& g) {
  auto mb = eval_ratio(nb, db, g), md = eval_ratio(nd, dd, g);
  if (!mb || !md) return std::nullopt;
  S a = (*mb - *md) / lift(Rational(8), g);
  S a2 = a * a;
  if constexpr (std::is_same_v<S, Rational>) {
    return a2;
  } else {
    if (!a2.is_rational()) return std::nullopt;
    return a2.a();
  }
}

// The five-point locus formula {oo,0,1,(1+-2a)^2} collapses.
bool abg_locus_degenerate(const Rational& A) {
  return A.is_zero() || A == Rational(1, 4) || A == Rational(1);
}

Family abg_1aa(const Rational& A) { return Family::abg(1, A, A); }

bool is_diagonal(const Moebius& m) { return m(0, 1).is_zero() && m(1, 0).is_zero(); }

// Height used to pick a class representative: max |entry|, then entries.
auto height_key(const Moebius& m) {
  Integer h(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h = std::max(h, abs(m(i, j)));
  return std::make_pair(h, m);
}

std::string hv_label(const Rational& A, const Rational& G, const Moebius& m) {
  // E(1:G:G)^{(k/l)t} has parameters scaled by l/k.
  Rational s = Rational(m(1, 1)) / Rational(m(0, 0));
  std::vector<Rational> ps = {Rational(1), A, A, s, G * s, G * s};
  Integer l(1);
  for (const auto& p : ps) l = l / gcd(l, p.den()) * p.den();
  std::vector<Integer> ints;
  Integer g(0);
  for (const auto& p : ps) {
    Rational v = p * Rational(l);
    ints.push_back(abs(v.num()));
    g = gcd(g, v.num());
  }
  for (auto& v : ints) v = v / abs(g);
  std::sort(ints.begin(), ints.end());
  std::string out = "X(";
  for (std::size_t i = 0; i < ints.size(); ++i) out += (i ? ":" : "") + ints[i].to_string();
  return out + ")";
}

bool is_gamma1_6(const Family& f) {
  if (f.is_abg()) return f.params()[0] == Rational(1) && f.params()[1] == Rational(1) && f.params()[2] == Rational(1);
  return f.label() == BeauvilleLabel::Gamma1_6;
}

}  // namespace

std::vector<Moebius> align_sets(const std::vector<BasePoint>& S, const std::vector<BasePoint>& S_prime, int common) {
  long dS = single_field(S), dT = single_field(S_prime);
  std::set<Moebius> found;
  const std::size_t n = S.size(), k = S_prime.size();
  for (std::size_t a0 = 0; a0 < n; ++a0)
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (a0 == a1 || a0 == a2 || a1 == a2) continue;
        const BasePoint* A[3] = {&S[a0], &S[a1], &S[a2]};
        for (std::size_t b0 = 0; b0 < k; ++b0)
          for (std::size_t b1 = 0; b1 < k; ++b1)
            for (std::size_t b2 = 0; b2 < k; ++b2) {
              if (b0 == b1 || b0 == b2 || b1 == b2) continue;
              const BasePoint* B[3] = {&S_prime[b0], &S_prime[b1], &S_prime[b2]};
              bool ok = true, quad = false;
              for (int i = 0; i < 3; ++i) {
                if (A[i]->field() != B[i]->field()) ok = false;
                if (A[i]->field() != 0) quad = true;
              }
              if (!ok) continue;
              std::optional<Moebius> m;
              if (quad) {
                long d = dS != 0 ? dS : dT;
                ProjPoint<QuadElem> qa[3] = {A[0]->in_field(d), A[1]->in_field(d), A[2]->in_field(d)};
                ProjPoint<QuadElem> qb[3] = {B[0]->in_field(d), B[1]->in_field(d), B[2]->in_field(d)};
                m = moebius_through(qa, qb);
              } else {
                ProjPoint<Rational> ra[3] = {A[0]->rational(), A[1]->rational(), A[2]->rational()};
                ProjPoint<Rational> rb[3] = {B[0]->rational(), B[1]->rational(), B[2]->rational()};
                m = moebius_through(ra, rb);
              }
              if (m && !found.count(*m) && common_count(*m, S, S_prime) == common) found.insert(*m);
            }
      }
  return {found.begin(), found.end()};
}

CaseAResult case_a_search() {
  CaseAResult res;
  const std::vector<PolyPoint> pts = {poly_inf(), poly_const(0), poly_const(1), poly_branch(1), poly_branch(-1)};

  std::set<std::pair<Rational, Rational>> pairs;  // (A, G)
  for (int p1 = 0; p1 < 5; ++p1)
    for (int p2 = 0; p2 < 5; ++p2)
      for (int p3 = 0; p3 < 5; ++p3) {
        if (p1 == p2 || p1 == p3 || p2 == p3) continue;
        ++res.choices;
        std::vector<int> rest;
        for (int i = 0; i < 5; ++i)
          if (i != p1 && i != p2 && i != p3) rest.push_back(i);
        // M sends P1 -> 0, P2 -> 1, P3 -> oo.
        Poly c23 = pbr(pts[p2], pts[p3]), c21 = pbr(pts[p2], pts[p1]);
        auto image = [&](const PolyPoint& t) { return PolyPoint{pbr(t, pts[p1]) * c23, pbr(t, pts[p3]) * c21}; };
        auto [nb, db] = image(pts[rest[0]]);
        auto [nd, dd] = image(pts[rest[1]]);
        // M(beta) = (1+2a)^2, M(delta) = (1-2a)^2 with a eliminated.
        Poly P = Rational(8) * (nb * db * dd * dd + nd * dd * db * db) - Rational(16) * db * db * dd * dd -
                 (nb * dd - nd * db) * (nb * dd - nd * db);
        if (P.is_zero()) {
          ++res.vanishing_choices;
          continue;
        }
        std::set<Rational> gs;
        for (const auto& r : rational_roots(P)) gs.insert(r * r);
        std::vector<Rational> ev, od;
        for (int i = 0; i <= P.degree(); ++i) (i % 2 ? od : ev).push_back(P.coeff(i));
        Poly E(ev), O(od);
        Poly h = O.is_zero() ? E : gcd(E, O);
        if (!h.is_zero() && h.degree() > 0)
          for (const auto& r : rational_roots(h)) gs.insert(r);

        for (const auto& G : gs) {
          if (G.sign() == 0) continue;
          Root g = sqrt_of(G);
          std::optional<Rational> A = g.rational ? alpha_square(nb, db, nd, dd, g.r) : alpha_square(nb, db, nd, dd, g.q);
          if (!A || abg_locus_degenerate(*A) || abg_locus_degenerate(G)) continue;
          pairs.insert({*A, G});
        }
      }

  // Concrete alignments; the polynomial condition only nominates (A, G).
  struct Hit {
    Rational A, G;
    Moebius M;
  };
  std::map<std::pair<Rational, Rational>, std::vector<Moebius>> classes;
  for (const auto& [A, G] : pairs) {
    FibrationSpec left(abg_1aa(A)), right(abg_1aa(G));
    std::vector<BasePoint> SA, SG;
    try {
      SA = locations(left);
      SG = locations(right);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateFamily) continue;
      throw;
    }
    for (const auto& M : align_sets(SA, SG, 5)) {
      ProductSpec spec(left, right.twisted(M));
      if (known_isogenous(spec)) continue;
      DefectReport rep = analyze(spec);
      if (rep.delta != 0) continue;
      Candidate c{spec, rep, A, G, std::nullopt, ""};
      res.all_maps.push_back(c);
      // Orient A <= G; swapping sides inverts the twist.
      if (A <= G) classes[{A, G}].push_back(M);
      else classes[{G, A}].push_back(M.inverse());
    }
  }

  for (auto& [key, ms] : classes) {
    const auto& [A, G] = key;
    std::set<Moebius> cls(ms.begin(), ms.end());
    if (A == G)
      for (const auto& m : ms) cls.insert(m.inverse());
    Moebius best = *std::min_element(cls.begin(), cls.end(),
                                     [](const Moebius& a, const Moebius& b) { return height_key(a) < height_key(b); });
    ProductSpec spec(FibrationSpec(abg_1aa(A)), FibrationSpec(abg_1aa(G), best));
    Candidate c{spec, analyze(spec), A, G, std::nullopt, ""};
    if (is_diagonal(best)) c.note = "equals " + hv_label(A, G, best);
    res.rows.push_back(std::move(c));
  }
  return res;
}

CaseBResult case_b_search() {
  CaseBResult res;
  const Rational J(Integer(389017), Integer(5184));
  const PolyPoint inf = poly_inf(), zero = poly_const(0), one = poly_const(1), u = poly_branch(1), v = poly_branch(-1);
  const std::vector<std::pair<std::string, std::array<PolyPoint, 4>>> subsets = {
      {"{0,1,u,v}", {zero, one, u, v}}, {"{oo,1,u,v}", {inf, one, u, v}}, {"{0,oo,u,v}", {zero, inf, u, v}}};

  std::set<Rational> alphas, degenerate;
  for (const auto& [name, q] : subsets) {
    Poly N = pbr(q[0], q[2]) * pbr(q[1], q[3]), D = pbr(q[0], q[3]) * pbr(q[1], q[2]);
    Poly g = gcd(N, D);
    if (!g.is_zero() && g.degree() > 0) {
      N = N / g;
      D = D / g;
    }
    Poly q2 = N * N - N * D + D * D;
    Poly E = Rational(J.den()) * q2 * q2 * q2 - Rational(J.num()) * N * N * D * D * (N - D) * (N - D);
    JEquation eq{name, Poly::from_integers(E.primitive_integers()), rational_roots(E)};
    for (const auto& r : eq.rational_roots) {
      Rational a = abs(r);
      if (abg_locus_degenerate(a * a)) degenerate.insert(a);
      else alphas.insert(a);
    }
    res.equations.push_back(std::move(eq));
  }
  res.alphas.assign(alphas.begin(), alphas.end());
  res.degenerate.assign(degenerate.begin(), degenerate.end());

  FibrationSpec g6(Family::abg(1, 1, 1));
  const std::vector<BasePoint> S6 = locations(g6);
  const BasePoint rigid[3] = {BasePoint::infinity(), BasePoint::of(Rational(0)), BasePoint::of(Rational(1))};
  for (const auto& a : res.alphas) {
    FibrationSpec left(abg_1aa(a * a));
    const std::vector<BasePoint> SA = locations(left);
    for (const auto& M : align_sets(SA, S6, 4)) {
      bool all_in = true;
      for (const auto& r : rigid)
        if (!contains(S6, M.apply(r))) all_in = false;
      if (all_in) continue;
      ProductSpec spec(left, g6.twisted(M));
      DefectReport rep = analyze(spec);
      if (rep.delta != 0) continue;
      res.rows.push_back(Candidate{spec, rep, a * a, Rational(1), a, ""});
    }
  }
  return res;
}

std::vector<Word> case_c_words() {
  const Moebius T(-1, 1, 0, 1), R(0, 1, 1, 0);
  const Moebius m[4] = {Moebius(9, 0, 1, 8), Moebius(9, 0, 0, 1), Moebius(8, 1, 0, 1), Moebius()};
  const Moebius RT = R * T;
  std::vector<Word> out;
  for (int i = 1; i <= 4; ++i)
    for (int l = i; l <= 4; ++l)
      for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 2; ++k) {
          Moebius w = m[i - 1];
          if (j) w = w * T;
          for (int r = 0; r < k; ++r) w = w * RT;
          w = w * m[l - 1].inverse();
          out.push_back(Word{i, j, k, l, w});
        }
  return out;
}

CaseCResult case_c_search(const Family& left, const Family& right) {
  CaseCResult res;
  FibrationSpec L(left), Rt(right);
  const std::vector<BasePoint> SL = locations(L), SR = locations(Rt);
  std::vector<Moebius> maps;
  if (is_gamma1_6(left) && is_gamma1_6(right)) {
    auto words = case_c_words();
    res.words = static_cast<int>(words.size());
    for (const auto& w : words) maps.push_back(w.M);
  } else {
    maps = align_sets(SL, SR, 3);
  }
  for (const auto& M : maps) {
    if (common_count(M, SL, SR) == static_cast<int>(SL.size()) && SL.size() == SR.size()) continue;
    ProductSpec spec(L, Rt.twisted(M));
    DefectReport rep = analyze(spec);
    if (rep.delta != 0) continue;
    res.rows.push_back(Candidate{spec, rep, std::nullopt, std::nullopt, std::nullopt, ""});
  }

  // Classes under M ~ M^{-1}; only meaningful for a self pairing.
  std::vector<bool> used(res.rows.size(), false);
  for (std::size_t a = 0; a < res.rows.size(); ++a) {
    if (used[a]) continue;
    std::vector<std::size_t> cls{a};
    used[a] = true;
    const Moebius& ma = res.rows[a].product.right.twist();
    for (std::size_t b = a + 1; b < res.rows.size(); ++b) {
      const Moebius& mb = res.rows[b].product.right.twist();
      if (!used[b] && (mb == ma || (left == right && mb == ma.inverse()))) {
        cls.push_back(b);
        used[b] = true;
      }
    }
    if (res.rows[a].report.h12 == 0) ++res.rigid_classes;
    if (cls.size() > 1) res.duplicate_classes.push_back(std::move(cls));
  }
  return res;
}

bool isogenous_case_check(const ProductSpec& spec) {
  if (!spec.isogenous) return false;
  DefectReport r = analyze(spec);
  return r.S.size() == 4;
}

}  // namespace cymod
