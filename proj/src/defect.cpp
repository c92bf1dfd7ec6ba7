#include "cymod/defect.hpp"

#include <algorithm>
#include <sstream>

namespace cymod {

namespace {

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r\n"));
  s.erase(s.find_last_not_of(" \t\r\n") + 1);
  return s;
}

bool contains(const std::vector<BasePoint>& v, const BasePoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

const SingularFibre* find_fibre(const std::vector<SingularFibre>& locus, const BasePoint& t) {
  for (const auto& f : locus)
    if (f.location == t) return &f;
  return nullptr;
}

// j-invariant of a 4-point set when it is rational.
std::optional<Rational> locus_j(const std::vector<BasePoint>& s) {
  if (s.size() != 4) return std::nullopt;
  long field = 0;
  for (const auto& p : s) {
    if (p.field() == 0) continue;
    if (field != 0 && field != p.field()) return std::nullopt;
    field = p.field();
  }
  if (field == 0) return j_of_points(s[0].rational(), s[1].rational(), s[2].rational(), s[3].rational());
  QuadElem j = j_of_points(s[0].in_field(field), s[1].in_field(field), s[2].in_field(field), s[3].in_field(field));
  if (!j.is_rational()) return std::nullopt;
  return j.a();
}

}  // namespace

ProductSpec ProductSpec::parse(std::string_view text) {
  std::string s(text);
  std::vector<std::string> parts;
  {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(trim(item));
  }
  if (parts.empty() || parts[0].empty()) throw Error(ErrorKind::ParseError, "empty product spec");
  std::string body = parts[0];
  std::size_t at = std::string::npos, len = 0;
  if (auto k = body.find(" x "); k != std::string::npos) at = k, len = 3;
  else if (auto k2 = body.find("\xC3\x97"); k2 != std::string::npos) at = k2, len = 2;  // UTF-8 multiplication sign
  if (at == std::string::npos)
    throw Error(ErrorKind::ParseError, "expected '<spec> x <spec>' in '" + body + "'");
  ProductSpec out(FibrationSpec::parse(trim(body.substr(0, at))), FibrationSpec::parse(trim(body.substr(at + len))));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& a = parts[i];
    if (a.empty()) continue;
    if (a == "isogenous") {
      out.isogenous = true;
    } else if (a.rfind("bad=", 0) == 0) {
      std::stringstream ss(a.substr(4));
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        try {
          std::size_t used = 0;
          long long p = std::stoll(item, &used);
          if (used != item.size() || !is_prime(p)) throw std::invalid_argument(item);
          out.known_bad_primes.insert(p);
        } catch (const std::exception&) {
          throw Error(ErrorKind::ParseError, "bad prime annotation '" + item + "' is not a prime");
        }
      }
    } else {
      throw Error(ErrorKind::ParseError, "unknown product annotation '" + a + "'");
    }
  }
  return out;
}

std::string ProductSpec::to_string() const {
  std::string s = left.to_string() + " x " + right.to_string();
  if (isogenous) s += "; isogenous";
  if (!known_bad_primes.empty()) {
    s += "; bad=";
    bool first = true;
    for (i64 p : known_bad_primes) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
  }
  return s;
}

ProductSpec ProductSpec::twisted(const Moebius& n) const {
  ProductSpec out(left.twisted(n), right.twisted(n), isogenous);
  out.known_bad_primes = known_bad_primes;
  return out;
}

bool known_isogenous(const ProductSpec& spec) {
  if (!(spec.left.family() == spec.right.family())) return false;
  Moebius rel = spec.right.twist() * spec.left.twist().inverse();
  if (rel.is_identity()) return true;
  if (!spec.left.family().is_abg() && spec.left.family().label() == BeauvilleLabel::Gamma0_8_Gamma1_4) {
    Moebius iso(1, -1, 1, 1);
    return rel == iso || rel == iso.inverse();
  }
  return false;
}

DefectReport analyze(const ProductSpec& spec) {
  auto left = singular_locus(spec.left), right = singular_locus(spec.right);
  for (const auto* side : {&left, &right}) {
    int e = euler_total(*side);
    if (e != 12)
      throw Error(ErrorKind::NotRational, (side == &left ? spec.left : spec.right).to_string() +
                                              ": singular fibres sum to " + std::to_string(e) + ", not 12");
  }
  DefectReport r;
  for (const auto& f : left) r.S.push_back(f.location);
  for (const auto& f : right) r.S_prime.push_back(f.location);
  for (const auto& f : left)
    if (const auto* g = find_fibre(right, f.location)) {
      r.S_common.push_back(f.location);
      r.common_fibres.emplace_back(f.location, f.m, g->m);
    }
  for (const auto& f : left)
    if (!contains(r.S_common, f.location)) r.tilde_fibres.push_back({f.location, f.m, Side::Left});
  for (const auto& f : right)
    if (!contains(r.S_common, f.location)) r.tilde_fibres.push_back({f.location, f.m, Side::Right});
  std::sort(r.tilde_fibres.begin(), r.tilde_fibres.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
  for (const auto& tf : r.tilde_fibres) r.S_tilde.push_back(tf.t);

  const int nS = static_cast<int>(r.S.size()), nS1 = static_cast<int>(r.S_prime.size());
  const int nS2 = static_cast<int>(r.S_common.size());
  r.d = spec.isogenous ? 1 : 0;
  r.pic_rank = r.d + 18 - 12 - 12 + nS + nS1;
  r.delta = r.d - 5 + nS + nS1 - nS2;
  r.h12 = schoen_h12(r);
  r.dim_U = 2 * r.delta + 2;
  if (delta_from_hodge(r) != r.delta)
    throw Error(ErrorKind::ModelFailure, "defect and Hodge bookkeeping disagree for " + spec.to_string());

  if (!spec.isogenous) {
    if (known_isogenous(spec))
      r.warnings.push_back(std::string(kind_name(ErrorKind::AnnotationRequired)) +
                           ": pair is a catalogued isogenous pattern; add '; isogenous'");
    else if (auto j1 = locus_j(r.S), j2 = locus_j(r.S_prime); j1 && j2 && *j1 == *j2)
      r.warnings.push_back("singular loci have equal j-invariant " + j1->to_string() + "; d = 0 assumed");
  }
  return r;
}

int schoen_h12(const DefectReport& r) {
  int extra = 0;
  for (const auto& tf : r.tilde_fibres) extra += tf.gamma - 1;
  return 1 + r.pic_rank - static_cast<int>(r.S_common.size()) + extra;
}

int delta_from_hodge(const DefectReport& r) {
  int extra = 0;
  for (const auto& tf : r.tilde_fibres) extra += tf.gamma - 1;
  return r.h12 - extra;
}

IntMatrix intersection_matrix(int gamma) {
  if (gamma < 2) throw Error(ErrorKind::InvalidArgument, "intersection matrix needs gamma >= 2");
  const int n = gamma - 1;
  IntMatrix m = IntMatrix::Constant(2 * n, 2 * n, Integer(0));
  auto block = [&](int i, int j, long c) {
    m(2 * i, 2 * j + 1) = Integer(c);
    m(2 * i + 1, 2 * j) = Integer(-c);
  };
  for (int i = 0; i < n; ++i) {
    block(i, i, -2);
    if (i + 1 < n) {
      block(i, i + 1, 1);
      block(i + 1, i, 1);
    }
  }
  return m;
}

int LSeriesShape::weight2_total() const {
  int s = 0;
  for (const auto& [t, k] : weight2) s += k;
  return s;
}

LSeriesShape lseries_shape(const DefectReport& r) {
  if (r.delta != 0)
    throw Error(ErrorKind::DefectNonzero, "L-series factorization needs delta = 0, got " + std::to_string(r.delta));
  LSeriesShape out;
  for (const auto& tf : r.tilde_fibres)
    if (tf.gamma >= 2) out.weight2.emplace_back(tf.t, tf.gamma - 1);
  return out;
}

std::vector<BadPrimeInfo> bad_primes(const ProductSpec& spec) {
  std::map<i64, std::vector<std::string>> reasons;
  auto add_factors = [&](const Integer& n, const std::string& why) {
    if (n.is_zero()) return;
    for (const auto& [q, e] : factorize(abs(n)))
      if (q.fits_long()) reasons[q.to_long()].push_back(why);
  };
  std::vector<std::pair<const FibrationSpec*, std::vector<SingularFibre>>> sides = {
      {&spec.left, singular_locus(spec.left)}, {&spec.right, singular_locus(spec.right)}};
  for (const auto& [fs, locus] : sides) {
    const Family& f = fs->family();
    if (f.is_abg())
      for (const auto& v : f.params()) {
        add_factors(v.num(), "parameter " + v.to_string() + " of " + f.to_string());
        add_factors(v.den(), "parameter " + v.to_string() + " of " + f.to_string());
      }
    add_factors(fs->twist().det(), "twist determinant of " + fs->to_string());
    for (const auto& sf : locus) {
      if (!sf.split_disc) continue;
      const std::string at = " at t = " + sf.location.to_string() + " on " + fs->to_string();
      add_factors(*sf.split_disc, "split discriminant" + at);
      if (sf.split_disc->mod(4) != 1) reasons[2].push_back("split discriminant" + at + " is not 1 mod 4");
    }
  }
  // Collisions of singular locations, including conjugates.
  std::vector<std::pair<std::vector<Integer>, std::string>> forms;
  for (const auto& [fs, locus] : sides)
    for (const auto& sf : locus) {
      auto mf = sf.location.min_form();
      if (std::none_of(forms.begin(), forms.end(), [&](const auto& e) { return e.first == mf; }))
        forms.emplace_back(mf, sf.location.to_string());
    }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i].first;
    if (f.size() == 3) add_factors(f[1] * f[1] - Integer(4) * f[0] * f[2], "conjugate locations " + forms[i].second + " collide");
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      add_factors(resultant(forms[i].first, forms[j].first),
                  "locations " + forms[i].second + " and " + forms[j].second + " collide");
  }
  std::vector<BadPrimeInfo> out;
  for (const auto& [p, why] : reasons) {
    std::string joined;
    for (const auto& w : why) {
      if (joined.find(w) != std::string::npos) continue;
      if (!joined.empty()) joined += "; ";
      joined += w;
    }
    out.push_back({p, joined, true});
  }
  for (i64 p : spec.known_bad_primes) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& b) { return b.p == p; });
    if (it == out.end()) out.push_back({p, "annotation", false});
    else it->reason += "; annotation";
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
  return out;
}

std::set<i64> bad_prime_set(const ProductSpec& spec) {
  std::set<i64> out;
  for (const auto& b : bad_primes(spec)) out.insert(b.p);
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

GateReport modularity_gate(const ProductSpec& spec, const DefectReport& r, const TraceSource& traces,
                           i64 prime_bound) {
  GateReport g;
  auto pf = [](bool b) { return b ? Verdict::Pass : Verdict::Fail; };
  g.conditions[0] = pf(r.delta == 0);
  g.notes[0] = "delta = " + std::to_string(r.delta);

  g.conditions[1] = Verdict::Pass;
  auto left = singular_locus(spec.left), right = singular_locus(spec.right);
  for (const auto& tf : r.tilde_fibres) {
    if (tf.gamma < 2) continue;
    const auto* sf = find_fibre(tf.singular_side == Side::Left ? left : right, tf.t);
    if (!sf->comps_rational) {
      if (g.conditions[1] == Verdict::Pass) g.conditions[1] = Verdict::Unknown;
      g.notes[1] += "irrational location " + tf.t.to_string() + "; ";
    } else if (!*sf->comps_rational) {
      g.conditions[1] = Verdict::Fail;
      g.notes[1] += "components at " + tf.t.to_string() + " not rational; ";
    }
  }

  auto bad = bad_prime_set(spec);
  g.conditions[2] = pf(!bad.count(3) && !bad.count(7));

  const bool traces_meaningful = g.conditions[0] == Verdict::Pass && g.conditions[1] != Verdict::Fail;
  auto need = [&](i64 p) -> std::optional<i64> {
    auto t = traces(p);
    if (!t && g.conditions[2] != Verdict::Pass)
      throw Error(ErrorKind::TraceUnavailable, "no trace at p = " + std::to_string(p) + " for " + spec.to_string());
    return t;
  };

  if (bad.count(5)) {
    g.conditions[3] = Verdict::Fail;
    g.notes[3] = "5 is bad";
  } else if (!traces_meaningful) {
    g.notes[3] = "not evaluated";
  } else {
    g.conditions[3] = Verdict::Fail;
    for (i64 p : primes_up_to(prime_bound)) {
      if (bad.count(p) || (p % 5 != 2 && p % 5 != 3)) continue;
      auto t = need(p);
      if (!t) {
        g.conditions[3] = Verdict::Unknown;
        continue;
      }
      if (*t % 5 != 0) {
        g.conditions[3] = Verdict::Pass;
        g.notes[3] = "t_" + std::to_string(p) + " = " + std::to_string(*t);
        break;
      }
    }
  }

  if (bad.count(3)) {
    g.conditions[4] = Verdict::Fail;
    g.notes[4] = "3 is bad";
  } else if (!traces_meaningful) {
    g.notes[4] = "not evaluated";
  } else if (auto t = need(3)) {
    g.conditions[4] = pf(*t % 3 != 0);
    g.notes[4] = "t_3 = " + std::to_string(*t);
  }

  g.modular = g.conditions[0] == Verdict::Pass && g.conditions[1] == Verdict::Pass &&
              (g.conditions[2] == Verdict::Pass || g.conditions[3] == Verdict::Pass || g.conditions[4] == Verdict::Pass);
  return g;
}

}  // namespace cymod
