#include "cymod/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "cymod/linalg.hpp"

namespace cymod {

namespace {

RatForm X() { return rat_monomial(1, 0, 0); }
RatForm Y() { return rat_monomial(0, 1, 0); }
RatForm Z() { return rat_monomial(0, 0, 1); }

struct LabelInfo {
  BeauvilleLabel label;
  const char* name;
};

const LabelInfo kLabels[] = {
    {BeauvilleLabel::Gamma3, "gamma3"},
    {BeauvilleLabel::Gamma1_4_Gamma2, "gamma1_4_gamma2"},
    {BeauvilleLabel::Gamma1_5, "gamma1_5"},
    {BeauvilleLabel::Gamma1_6, "gamma1_6"},
    {BeauvilleLabel::Gamma0_8_Gamma1_4, "gamma0_8_gamma1_4"},
    {BeauvilleLabel::Gamma0_9_Gamma1_3, "gamma0_9_gamma1_3"},
};

// A = alpha^2 with alpha = r*sqrt(d); d = 1 when A is a rational square.
std::pair<Rational, long> split_square(const Rational& a) {
  Integer s = a.num() * a.den();
  Integer d = squarefree_part(s);
  Integer k2 = s / d;
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), k2.raw().get_mpz_t());
  return {Rational(Integer(k), a.den()), d.to_long()};
}

BasePoint quad_point(const Rational& a, const Rational& b, long d) {
  if (d == 1) return BasePoint::of(a + b);
  return BasePoint::of(QuadElem(a, b, d));
}

struct Entry {
  const char* loc;
  int m;
};

std::vector<std::pair<BasePoint, int>> beauville_table(BeauvilleLabel l) {
  std::vector<Entry> rows;
  switch (l) {
    case BeauvilleLabel::Gamma3:
      rows = {{"oo", 3}, {"1", 3}, {"(-1/2+1/2*sqrt(-3))", 3}, {"(-1/2-1/2*sqrt(-3))", 3}};
      break;
    case BeauvilleLabel::Gamma1_4_Gamma2:
      rows = {{"oo", 4}, {"0", 4}, {"1", 2}, {"-1", 2}};
      break;
    case BeauvilleLabel::Gamma1_5:
      rows = {{"oo", 5}, {"0", 5}, {"(-11/2+5/2*sqrt(5))", 1}, {"(-11/2-5/2*sqrt(5))", 1}};
      break;
    case BeauvilleLabel::Gamma1_6:
      rows = {{"oo", 6}, {"0", 2}, {"1", 3}, {"9", 1}};
      break;
    case BeauvilleLabel::Gamma0_8_Gamma1_4:
      rows = {{"oo", 8}, {"0", 2}, {"1", 1}, {"-1", 1}};
      break;
    case BeauvilleLabel::Gamma0_9_Gamma1_3:
      rows = {{"oo", 9}, {"1", 1}, {"(-1/2+1/2*sqrt(-3))", 1}, {"(-1/2-1/2*sqrt(-3))", 1}};
      break;
  }
  std::vector<std::pair<BasePoint, int>> out;
  for (const auto& r : rows) out.emplace_back(BasePoint::parse(r.loc), r.m);
  return out;
}

bool is_abg_111(const Family& f) {
  return f.is_abg() && f.params()[0] == f.params()[1] && f.params()[1] == f.params()[2] &&
         f.params()[0] == Rational(1);
}

// E(1:A:A) with A != 1.
std::optional<Rational> abg_1aa(const Family& f) {
  if (!f.is_abg()) return std::nullopt;
  const auto& p = f.params();
  if (p[0] != Rational(1) || p[1] != p[2] || p[1] == Rational(1)) return std::nullopt;
  return p[1];
}

void check_exclusions(const Family& f) {
  if (auto a = abg_1aa(f); a && (*a == Rational(1, 4)))
    throw Error(ErrorKind::DegenerateFamily, f.to_string() + ": 2*alpha in {0,1,2}");
}

// Catalogued untwisted loci (locations and I_m only).
std::optional<std::vector<std::pair<BasePoint, int>>> catalogued(const Family& f) {
  if (!f.is_abg()) return beauville_table(f.label());
  if (is_abg_111(f)) return beauville_table(BeauvilleLabel::Gamma1_6);
  if (auto a = abg_1aa(f)) {
    check_exclusions(f);
    auto [r, d] = split_square(*a);
    Rational c = Rational(1) + Rational(4) * *a, s = Rational(4) * r;
    std::vector<std::pair<BasePoint, int>> out = {{BasePoint::infinity(), 6},
                                                  {BasePoint::of(Rational(0)), 2},
                                                  {BasePoint::of(Rational(1)), 2},
                                                  {quad_point(c, s, d), 1},
                                                  {quad_point(c, -s, d), 1}};
    return out;
  }
  return std::nullopt;
}

// G(x, y0, z0) as a polynomial in x.
Poly restrict_x(const RatForm& g, const Rational& y0, const Rational& z0) {
  std::vector<Rational> c(g.degree() + 1);
  g.for_each([&](int i, int j, int k, const Rational& v) {
    if (!v.is_zero()) c[i] += v * pow(y0, j) * pow(z0, k);
  });
  return Poly(std::move(c));
}

std::vector<Rational> rational_roots_or_empty(const Poly& f) {
  if (f.degree() < 1) return {};
  return rational_roots(f);
}

// Coefficient list c_0..c_deg of a polynomial padded to a formal degree.
std::vector<Rational> padded(const Poly& p, int deg) {
  std::vector<Rational> c(deg + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(i);
  return c;
}

using RatPoint = std::array<Rational, 3>;

// Degree in x of a form on the chart z = 1, or -1 for the zero form.
int x_degree(const RatForm& g) {
  int n = -1;
  g.for_each([&](int i, int, int, const Rational& v) {
    if (!v.is_zero()) n = std::max(n, i);
  });
  return n;
}

bool all_partials_vanish(const RatForm g[3], const RatPoint& pt) {
  for (int v = 0; v < 3; ++v)
    if (!g[v](pt[0], pt[1], pt[2]).is_zero()) return false;
  return true;
}

std::vector<RatPoint> rational_singular_points(const RatForm& g) {
  RatForm d[3] = {g.partial(0), g.partial(1), g.partial(2)};
  std::vector<RatPoint> out;
  auto non_reduced = [&] { return Error(ErrorKind::NotSemistable, "member singular along a line: " + g.to_string()); };
  // line z = 0
  if (all_partials_vanish(d, {Rational(1), Rational(0), Rational(0)})) out.push_back({Rational(1), Rational(0), Rational(0)});
  {
    Poly h = gcd(gcd(restrict_x(d[0], Rational(1), Rational(0)), restrict_x(d[1], Rational(1), Rational(0))),
                 restrict_x(d[2], Rational(1), Rational(0)));
    if (h.is_zero()) throw non_reduced();
    if (h.degree() >= 1)
      for (const auto& x0 : rational_roots(h)) out.push_back({x0, Rational(1), Rational(0)});
  }
  // chart z = 1: y-coordinates from a resultant in x of two of f, f_x, f_y, f_z
  Poly r;
  {
    const RatForm* pairs[5][2] = {{&d[0], &d[1]}, {&d[0], &d[2]}, {&d[1], &d[2]}, {&g, &d[0]}, {&g, &d[1]}};
    for (const auto& pr : pairs) {
      int n = x_degree(*pr[0]), m = x_degree(*pr[1]);
      if (n < 0 || m < 0) continue;
      std::vector<Rational> ys, vals;
      for (int s = 0; s <= 16; ++s) {
        Rational y0(s);
        ys.push_back(y0);
        vals.push_back(resultant(padded(restrict_x(*pr[0], y0, Rational(1)), n), padded(restrict_x(*pr[1], y0, Rational(1)), m)));
      }
      r = interpolate(ys, vals);
      if (!r.is_zero()) break;
    }
    if (r.is_zero()) throw non_reduced();
  }
  if (r.degree() >= 1) {
    for (const auto& y0 : rational_roots(r)) {
      Poly h = gcd(gcd(restrict_x(g, y0, Rational(1)), restrict_x(d[0], y0, Rational(1))), restrict_x(d[1], y0, Rational(1)));
      if (h.is_zero()) throw non_reduced();
      if (h.degree() < 1) continue;
      for (const auto& x0 : rational_roots(h)) {
        RatPoint pt{x0, y0, Rational(1)};
        if (all_partials_vanish(d, pt)) out.push_back(pt);
      }
    }
  }
  return out;
}

RatPoint cross(const RatPoint& a, const RatPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer square_class(const Rational& q) { return squarefree_part(q.num() * q.den()); }

std::optional<std::pair<RatPoint, RatPoint>> rational_line_component(const RatForm& g) {
  std::vector<RatPoint> cand;
  const Rational zero(0), one(1);
  // z = 0: points (x:1:0) and (1:0:0)
  for (const auto& x0 : rational_roots_or_empty(restrict_x(g, one, zero))) cand.push_back({x0, one, zero});
  if (g(one, zero, zero).is_zero()) cand.push_back({one, zero, zero});
  // x = 0: points (0:y:1) and (0:1:0)
  {
    std::vector<Rational> c(4);
    g.for_each([&](int i, int j, int, const Rational& v) {
      if (i == 0) c[j] += v;
    });
    for (const auto& y0 : rational_roots_or_empty(Poly(c))) cand.push_back({zero, y0, one});
    if (g(zero, one, zero).is_zero()) cand.push_back({zero, one, zero});
  }
  // y = 0: points (x:0:1)
  for (const auto& x0 : rational_roots_or_empty(restrict_x(g, zero, one))) cand.push_back({x0, zero, one});
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      RatPoint n = cross(cand[i], cand[j]);
      if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) continue;
      bool on = true;
      for (int s = 0; s < 4 && on; ++s) {
        Rational k(s);
        RatPoint q{cand[i][0] + k * cand[j][0], cand[i][1] + k * cand[j][1], cand[i][2] + k * cand[j][2]};
        if (s == 0) q = cand[j];
        on = g(q[0], q[1], q[2]).is_zero();
      }
      if (on) return std::make_pair(cand[i], cand[j]);
    }
  return std::nullopt;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, std::vector<SingularFibre>>& locus_cache() {
  static std::map<std::string, std::vector<SingularFibre>> c;
  return c;
}
std::map<std::string, FibrationSpec>& alias_table() {
  static std::map<std::string, FibrationSpec> t;
  return t;
}
}  // namespace

std::string_view label_name(BeauvilleLabel l) {
  for (const auto& i : kLabels)
    if (i.label == l) return i.name;
  return "?";
}

std::optional<BeauvilleLabel> parse_label(std::string_view name) {
  for (const auto& i : kLabels)
    if (name == i.name) return i.label;
  return std::nullopt;
}

const std::vector<BeauvilleLabel>& all_beauville_labels() {
  static const std::vector<BeauvilleLabel> all = {BeauvilleLabel::Gamma3,           BeauvilleLabel::Gamma1_4_Gamma2,
                                                  BeauvilleLabel::Gamma1_5,         BeauvilleLabel::Gamma1_6,
                                                  BeauvilleLabel::Gamma0_8_Gamma1_4, BeauvilleLabel::Gamma0_9_Gamma1_3};
  return all;
}

Family::Family(Rational a, Rational b, Rational c) : params_{a, b, c} {
  for (const auto& v : params_)
    if (v.is_zero()) throw Error(ErrorKind::DegenerateFamily, "E(a:b:c) needs nonzero parameters");
  RatForm x = X(), y = Y(), z = Z();
  f0_ = (x + y + z) * (x * y * a + y * z * b + z * x * c);
  f1_ = x * y * z;
}

Family Family::abg(Rational a, Rational b, Rational c) { return Family(std::move(a), std::move(b), std::move(c)); }

Family::Family(BeauvilleLabel l) : label_(l), params_{Rational(0), Rational(0), Rational(0)} {
  RatForm x = X(), y = Y(), z = Z();
  switch (l) {
    case BeauvilleLabel::Gamma3:
      f0_ = x * x * x + y * y * y + z * z * z;
      f1_ = x * y * z * Rational(3);
      break;
    case BeauvilleLabel::Gamma1_4_Gamma2:
      f0_ = x * (x * x + z * z + z * y * Rational(2));
      f1_ = z * (x * x - y * y);
      break;
    case BeauvilleLabel::Gamma1_5:
      f0_ = x * (x - z) * (y - z);
      f1_ = z * y * (x - y);
      break;
    case BeauvilleLabel::Gamma1_6:
      f0_ = (x + y + z) * (x * y + y * z + z * x);
      f1_ = x * y * z;
      break;
    case BeauvilleLabel::Gamma0_8_Gamma1_4:
      f0_ = (x + y) * (x * y + z * z);
      f1_ = x * y * z * Rational(4);
      break;
    case BeauvilleLabel::Gamma0_9_Gamma1_3:
      f0_ = x * x * y + y * y * z + z * z * x;
      f1_ = x * y * z * Rational(3);
      break;
  }
}

std::string Family::to_string() const {
  if (!is_abg()) return "beauville(" + std::string(label_name(*label_)) + ")";
  return "abg(" + params_[0].to_string() + "," + params_[1].to_string() + "," + params_[2].to_string() + ")";
}

FibrationSpec::FibrationSpec(Family family, Moebius twist) : family_(std::move(family)), twist_(std::move(twist)) {}

std::string FibrationSpec::to_string() const {
  std::string s = family_.to_string();
  if (!twist_.is_identity()) s += "@" + twist_.to_string();
  return s;
}

FibrationSpec FibrationSpec::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::ParseError, why + " in fibration spec '" + std::string(text) + "'");
  };
  Moebius twist;
  if (auto at = s.find('@'); at != std::string::npos) {
    twist = Moebius::parse(s.substr(at + 1));
    s = s.substr(0, at);
  }
  if (auto alias = lookup_alias(s)) return alias->twisted(twist);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw fail("expected 'abg(...)' or 'beauville(...)' at '" + s + "'");
  std::string head = s.substr(0, open), body = s.substr(open + 1, s.size() - open - 2);
  if (head == "abg") {
    std::vector<Rational> ps;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) ps.push_back(Rational::parse(item));
    if (ps.size() != 3) throw fail("abg needs three parameters, got '" + body + "'");
    return FibrationSpec(Family::abg(ps[0], ps[1], ps[2]), twist);
  }
  if (head == "beauville") {
    auto l = parse_label(body);
    if (!l) throw fail("unknown Beauville label '" + body + "'");
    return FibrationSpec(Family::beauville(*l), twist);
  }
  throw fail("unknown family '" + head + "'");
}

void load_catalog_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read catalogue override file " + path);
  std::string line;
  int lineno = 0;
  std::map<std::string, FibrationSpec> added;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": expected 'name = spec'");
    std::string name = line.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    added.emplace(name, FibrationSpec::parse(line.substr(eq + 1)));
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  for (auto& [k, v] : added) alias_table().insert_or_assign(k, v);
}

std::optional<FibrationSpec> lookup_alias(std::string_view name) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = alias_table().find(std::string(name));
  if (it == alias_table().end()) return std::nullopt;
  return it->second;
}

RatForm member_form(const Family& f, const ProjPoint<Rational>& t) {
  return f.f0() * t.v() - f.f1() * t.u();
}

TernaryForm<QuadElem> member_form(const Family& f, const ProjPoint<QuadElem>& t) {
  const long d = t.u().d();
  QuadElem zero = QuadElem::embed(Rational(0), d);
  auto up = [&](const Rational& r) { return QuadElem::embed(r, d); };
  auto g0 = f.f0().map<QuadElem>(up, zero), g1 = f.f1().map<QuadElem>(up, zero);
  return g0 * t.v() - g1 * t.u();
}

Poly discriminant_poly(const Family& f) {
  std::vector<Rational> ts, vals;
  for (int s = 0; s <= 12; ++s) {
    ts.emplace_back(s);
    vals.push_back(cubic_discriminant(f.f0() - f.f1() * Rational(s)));
  }
  return interpolate(ts, vals);
}

std::vector<std::pair<BasePoint, int>> discriminant_profile(const FibrationSpec& spec) {
  const Family& f = spec.family();
  check_exclusions(f);
  Poly delta = discriminant_poly(f);
  if (delta.is_zero()) throw Error(ErrorKind::DegenerateFamily, f.to_string() + ": every member is singular");
  std::vector<std::pair<BasePoint, int>> out;
  if (delta.degree() < 12) out.emplace_back(BasePoint::infinity(), 12 - delta.degree());
  for (const auto& [g, k] : squarefree_decomposition(delta)) {
    Poly rest = g;
    for (const auto& r : rational_roots(g)) {
      out.emplace_back(BasePoint::of(r), k);
      rest = rest / Poly::root(r);
    }
    if (rest.degree() == 2) {
      // roots (-b +- sqrt(b^2 - 4ac)) / 2a
      Rational a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
      Rational disc = b * b - Rational(4) * a * c;
      auto [r, d] = split_square(disc);
      Rational re = -b / (Rational(2) * a), im = r / (Rational(2) * a);
      out.emplace_back(quad_point(re, im, d), k);
      out.emplace_back(quad_point(re, -im, d), k);
    } else if (rest.degree() > 2) {
      throw Error(ErrorKind::IrrationalLocusUnsupported,
                  f.to_string() + ": singular locus needs a field of degree > 2: " + rest.to_string("t"));
    }
  }
  for (const auto& [loc, m] : out) {
    bool multiplicative = loc.is_rational() ? !aronhold_s(member_form(f, loc.rational())).is_zero()
                                            : !aronhold_s(member_form(f, loc.quad())).is_zero();
    if (!multiplicative)
      throw Error(ErrorKind::NotSemistable, f.to_string() + ": additive fibre at t = " + loc.to_string());
  }
  Moebius inv = spec.twist().inverse();
  for (auto& [loc, m] : out) loc = inv.apply(loc);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Integer member_split_disc(const RatForm& g) {
  auto nodes = rational_singular_points(g);
  if (!nodes.empty()) {
    const RatPoint& pt = nodes.front();
    int k = !pt[2].is_zero() ? 2 : (!pt[1].is_zero() ? 1 : 0);
    RatForm d[3] = {g.partial(0), g.partial(1), g.partial(2)};
    int a = (k + 1) % 3, b = (k + 2) % 3;
    auto h = [&](int i, int j) { return d[i].partial(j)(pt[0], pt[1], pt[2]); };
    Rational minor = h(a, a) * h(b, b) - h(a, b) * h(a, b);
    if (minor.is_zero()) throw Error(ErrorKind::NotSemistable, "non-ordinary singular point on " + g.to_string());
    return square_class(-minor);
  }
  if (auto line = rational_line_component(g)) {
    auto [p1, p2] = *line;
    RatPoint n = cross(p1, p2);
    RatForm d[3] = {g.partial(0), g.partial(1), g.partial(2)};
    auto q = [&](const Rational& s, const Rational& u) {
      RatPoint x{s * p1[0] + u * p2[0], s * p1[1] + u * p2[1], s * p1[2] + u * p2[2]};
      Rational acc(0);
      for (int v = 0; v < 3; ++v) acc += n[v] * d[v](x[0], x[1], x[2]);
      return acc;
    };
    Rational qa = q(Rational(1), Rational(0)), qc = q(Rational(0), Rational(1));
    Rational qb = q(Rational(1), Rational(1)) - qa - qc;
    Rational disc = qb * qb - Rational(4) * qa * qc;
    if (disc.is_zero()) throw Error(ErrorKind::NotSemistable, "line tangent to residual conic on " + g.to_string());
    return square_class(disc);
  }
  throw Error(ErrorKind::ModelFailure, "singular member without rational node or rational line: " + g.to_string());
}

namespace {

std::vector<SingularFibre> untwisted_locus(const Family& f) {
  const std::string key = f.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = locus_cache().find(key);
    if (it != locus_cache().end()) return it->second;
  }
  auto base = catalogued(f);
  std::vector<std::pair<BasePoint, int>> rows = base ? *base : discriminant_profile(FibrationSpec(f));
  std::vector<SingularFibre> out;
  for (const auto& [loc, m] : rows) {
    SingularFibre sf{loc, m, std::nullopt, std::nullopt, std::nullopt};
    if (loc.is_rational()) {
      Integer sd = member_split_disc(member_form(f, loc.rational()));
      bool comps = sd == Integer(1) || m <= 2;
      sf.split_disc = sd;
      sf.comps_rational = comps;
      sf.comp_disc = comps ? Integer(1) : sd;
    }
    out.push_back(sf);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].location == out[j].location)
        throw Error(ErrorKind::DegenerateFamily, key + ": singular locations collide at " + out[i].location.to_string());
  std::lock_guard<std::mutex> lock(cache_mutex());
  locus_cache().emplace(key, out);
  return out;
}

}  // namespace

std::vector<SingularFibre> singular_locus(const FibrationSpec& spec) {
  auto out = untwisted_locus(spec.family());
  if (!spec.twist().is_identity()) {
    Moebius inv = spec.twist().inverse();
    for (auto& sf : out) sf.location = inv.apply(sf.location);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.location < b.location; });
  return out;
}

int euler_total(const std::vector<SingularFibre>& locus) {
  int s = 0;
  for (const auto& f : locus) s += f.m;
  return s;
}

std::pair<Integer, Integer> splitting_data(const FibrationSpec& spec, const SingularFibre& fibre) {
  if (!fibre.location.is_rational())
    throw Error(ErrorKind::IrrationalLocation, "splitting data at " + fibre.location.to_string() + " is per-prime");
  for (const auto& sf : singular_locus(spec))
    if (sf.location == fibre.location) return {*sf.split_disc, *sf.comp_disc};
  throw Error(ErrorKind::InvalidArgument, fibre.location.to_string() + " is not a singular location of " + spec.to_string());
}

std::pair<CubicModP, CubicModP> pencil_mod_p(const Family& f, i64 p) {
  if (f.is_abg())
    for (const auto& v : f.params())
      if (v.num().mod(p) == 0 || v.den().mod(p) == 0)
        throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides parameter " + v.to_string() + " of " + f.to_string());
  return {CubicModP::reduce(f.f0(), p), CubicModP::reduce(f.f1(), p)};
}

i64 apply_mod_p(const Moebius& m, i64 t_index, i64 p) {
  if (m.det().mod(p) == 0)
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides twist determinant of " + m.to_string());
  i64 u = t_index == p ? 1 : t_index, v = t_index == p ? 0 : 1;
  i64 a = m(0, 0).mod(p), b = m(0, 1).mod(p), c = m(1, 0).mod(p), d = m(1, 1).mod(p);
  return P1Index::of(mod_add(mod_mul(a, u, p), mod_mul(b, v, p), p), mod_add(mod_mul(c, u, p), mod_mul(d, v, p), p), p);
}

CubicModP fibre_cubic(const FibrationSpec& spec, i64 t_index, i64 p) {
  auto [f0, f1] = pencil_mod_p(spec.family(), p);
  return pencil_member(f0, f1, apply_mod_p(spec.twist(), t_index, p));
}

CubicModP fibre_cubic(const FibrationSpec& spec, const ProjPoint<Rational>& t, i64 p) {
  auto idx = reduce_location(BasePoint(t), p);
  return fibre_cubic(spec, idx.front(), p);
}

std::vector<i64> reduce_location(const BasePoint& t, i64 p) {
  std::vector<Integer> form = t.min_form();
  std::vector<i64> c;
  for (const auto& v : form) c.push_back(v.mod(p));
  auto eval = [&](i64 u, i64 v) {
    // sum c_k u^k v^{n-k}
    i64 acc = 0;
    const int n = static_cast<int>(c.size()) - 1;
    for (int k = 0; k <= n; ++k) acc = mod_add(acc, mod_mul(c[k], mod_mul(mod_pow(u, k, p), mod_pow(v, n - k, p), p), p), p);
    return acc;
  };
  std::vector<i64> out;
  for (i64 u = 0; u < p; ++u)
    if (eval(u, 1) == 0) out.push_back(u);
  if (eval(1, 0) == 0) out.push_back(p);
  return out;
}

}  // namespace cymod
