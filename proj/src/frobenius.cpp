#include "cymod/frobenius.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace cymod {

namespace {

struct SingularAt {
  int m;
  std::optional<Integer> split_disc;
  std::string where;
};

std::string at_prime(i64 p) { return " mod " + std::to_string(p); }

}  // namespace

FibrationModP::FibrationModP(const FibrationSpec& spec, i64 p) : p_(p), local_(p + 1) {
  auto [f0, f1] = pencil_mod_p(spec.family(), p);
  if (f1.is_zero() || f0.is_zero())
    throw Error(ErrorKind::BadPrime, "pencil of " + spec.to_string() + " degenerates" + at_prime(p));
  if (spec.twist().det().mod(p) == 0)
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides twist determinant of " + spec.to_string());

  std::map<i64, SingularAt> singular;
  for (const auto& sf : singular_locus(spec)) {
    auto idx = reduce_location(sf.location, p);
    if (!sf.location.is_rational() && idx.size() == 1)
      throw Error(ErrorKind::LocationCollision, "conjugate locations " + sf.location.to_string() + " collide" + at_prime(p));
    // Both conjugates share m; the first of the pair claims both roots.
    if (!sf.location.is_rational() && idx.size() == 2 && singular.count(idx[0]) &&
        singular[idx[0]].where == sf.location.conjugate().to_string())
      continue;
    const std::vector<i64>& mine = idx;
    for (i64 t : mine) {
      if (singular.count(t))
        throw Error(ErrorKind::LocationCollision, "locations " + singular[t].where + " and " + sf.location.to_string() +
                                                      " collide" + at_prime(p));
      singular[t] = {sf.m, sf.split_disc, sf.location.to_string()};
    }
  }

  PencilHistogram hist(f0, f1);
  for (i64 t = 0; t <= p; ++t) {
    const i64 u = apply_mod_p(spec.twist(), t, p);
    const CubicModP g = pencil_member(f0, f1, u);
    const MemberClass cls = classify_member(g, hist.member(u));
    LocalTrace& lt = local_[t];
    lt.t = t;
    auto it = singular.find(t);
    if (it == singular.end()) {
      if (cls.kind != MemberKind::Smooth)
        throw Error(ErrorKind::BadPrime, spec.to_string() + ": extra singular fibre at t = " + std::to_string(t) + at_prime(p));
      lt.a = cls.trace;
      lt.fibre_count = p + 1 - lt.a;
      continue;
    }
    const SingularAt& s = it->second;
    if (cls.kind == MemberKind::Smooth || cls.kind == MemberKind::Additive)
      throw Error(ErrorKind::BadPrime, spec.to_string() + ": fibre at " + s.where + " is not multiplicative" + at_prime(p));
    lt.a = cls.trace;
    if (s.split_disc) {
      int k = kronecker(*s.split_disc, p);
      if (k == 0)
        throw Error(ErrorKind::BadPrime, "split discriminant " + s.split_disc->to_string() + " vanishes" + at_prime(p));
      if (k != lt.a)
        throw Error(ErrorKind::ModelFailure, spec.to_string() + ": split class at " + s.where + " disagrees with the reduced fibre" + at_prime(p));
    }
    lt.multiplicative = true;
    lt.m = s.m;
    if (lt.a == 1) {
      lt.fixed_components = s.m;
      lt.rational_nodes = s.m;
    } else {
      // Frobenius reflects the cycle through the identity component.
      lt.fixed_components = s.m % 2 ? 1 : 2;
      lt.rational_nodes = s.m % 2 ? 1 : 0;
    }
    lt.fibre_count = 1 + p * lt.fixed_components - lt.a;
    lt.node_weight = lt.fixed_components - 1 + lt.a;
  }
}

LocalTrace local_trace(const FibrationSpec& spec, i64 t_index, i64 p) { return FibrationModP(spec, p).at(t_index); }

i64 ap_elliptic(const FibrationSpec& spec, const ProjPoint<Rational>& t, i64 p) {
  for (const auto& sf : singular_locus(spec))
    if (sf.location == BasePoint(t))
      throw Error(ErrorKind::SingularFibre, "t = " + sf.location.to_string() + " is a singular location of " + spec.to_string());
  auto idx = reduce_location(BasePoint(t), p);
  if (idx.size() != 1) throw Error(ErrorKind::BadPrime, "t does not reduce" + at_prime(p));
  auto [f0, f1] = pencil_mod_p(spec.family(), p);
  const i64 u = apply_mod_p(spec.twist(), idx[0], p);
  CubicModP g = pencil_member(f0, f1, u);
  if (!g.singular_points().empty() || g.is_zero())
    throw Error(ErrorKind::BadPrime, "fibre at t = " + BasePoint(t).to_string() + " is singular" + at_prime(p));
  const i64 a = p + 1 - count_cubic(g);
  // singular over an extension of F_p only
  if (a * a > 4 * p)
    throw Error(ErrorKind::BadPrime, "fibre at t = " + BasePoint(t).to_string() + " is singular" + at_prime(p));
  return a;
}

namespace {

void check_good(const ProductSpec& spec, i64 p) {
  for (const auto& b : bad_primes(spec))
    if (b.p == p) throw Error(ErrorKind::BadPrime, std::to_string(p) + ": " + b.reason);
}

}  // namespace

ProductCount count_product(const ProductSpec& spec, i64 p) {
  check_good(spec, p);
  FibrationModP l(spec.left, p), r(spec.right, p);
  ProductCount c;
  for (i64 t = 0; t <= p; ++t) {
    const auto &a = l.at(t), &b = r.at(t);
    c.W += a.fibre_count * b.fibre_count;
    if (a.multiplicative && b.multiplicative) c.nodes += static_cast<i64>(a.node_weight) * b.node_weight;
  }
  return c;
}

HodgeModel hodge_model(const DefectReport& r) {
  int s = 0;
  for (const auto& [t, m, n] : r.common_fibres) s += m * n;
  return {2 * s, r.h12 + s, r.h12};
}

TraceRecord extract_apU(const ProductSpec& spec, i64 p) { return extract_apU(spec, analyze(spec), p); }

TraceRecord extract_apU(const ProductSpec& spec, const DefectReport& report, i64 p) {
  if (report.delta != 0)
    throw Error(ErrorKind::DefectNonzero, spec.to_string() + ": delta = " + std::to_string(report.delta));
  check_good(spec, p);
  FibrationModP l(spec.left, p), r(spec.right, p);
  const HodgeModel hm = hodge_model(report);

  // Twist character of an isogenous pair: a' = chi * a fibrewise.
  i64 chi = 0;
  if (report.d == 1) {
    for (i64 t = 0; t <= p; ++t) {
      const auto &a = l.at(t), &b = r.at(t);
      if (a.multiplicative != b.multiplicative || a.a == 0) continue;
      i64 c = b.a == a.a ? 1 : (b.a == -a.a ? -1 : 0);
      if (c == 0 || (chi != 0 && c != chi))
        throw Error(ErrorKind::ModelFailure, spec.to_string() + ": isogenous sides have unrelated traces" + at_prime(p));
      chi = c;
    }
    if (chi == 0) throw Error(ErrorKind::ModelFailure, spec.to_string() + ": no fibre fixes the twist character" + at_prime(p));
  }

  TraceRecord rec;
  rec.p = p;
  rec.h11 = hm.h11;
  i64 sum_a = 0, sum_b = 0, classes = 0, sheaf = 0;
  for (i64 t = 0; t <= p; ++t) {
    const auto &a = l.at(t), &b = r.at(t);
    rec.W += a.fibre_count * b.fibre_count;
    sum_a += a.a;
    sum_b += b.a;
    if (a.multiplicative && b.multiplicative) {
      rec.nodes += static_cast<i64>(a.node_weight) * b.node_weight;
      classes += static_cast<i64>(a.fixed_components) * b.fixed_components - 1;
      sheaf += (1 + p) * a.a * b.a;
    } else {
      if (a.multiplicative) {
        classes += a.fixed_components - 1;
        rec.correction += (a.fixed_components - 1) * b.a;
      } else if (b.multiplicative) {
        classes += b.fixed_components - 1;
        rec.correction += (b.fixed_components - 1) * a.a;
      }
      sheaf += a.a * b.a;
    }
  }
  if ((sum_a + sum_b) % p != 0)
    throw Error(ErrorKind::ModelFailure, spec.to_string() + ": fibre traces do not sum to a multiple of p" + at_prime(p));
  rec.What = rec.W + p * rec.nodes;
  rec.T2 = 3 + report.d * chi - (sum_a + sum_b) / p + classes;
  rec.apU = 1 + p * p * p + (p + p * p) * rec.T2 - rec.What - p * rec.correction;

  const i64 direct = -sheaf + report.d * chi * (p + p * p);
  std::ostringstream ledger;
  ledger << to_tsv(rec);
  if (direct != rec.apU)
    throw Error(ErrorKind::ModelFailure, spec.to_string() + ": Lefschetz ledger " + ledger.str() +
                                             " disagrees with the fibre-sum trace " + std::to_string(direct));
  if (static_cast<double>(rec.apU * rec.apU) > 4.0 * static_cast<double>(p * p * p))
    throw Error(ErrorKind::ModelFailure, spec.to_string() + ": Weil bound fails, ledger " + ledger.str());
  return rec;
}

std::string ledger_header() { return "# p\tW\tnodes\tWhat\tT2\th11\tcorrection\tapU"; }

std::string to_tsv(const TraceRecord& r) {
  std::ostringstream os;
  os << r.p << '\t' << r.W << '\t' << r.nodes << '\t' << r.What << '\t' << r.T2 << '\t' << r.h11 << '\t' << r.correction
     << '\t' << r.apU;
  return os.str();
}

TraceRecord parse_tsv(const std::string& line) {
  std::istringstream is(line);
  TraceRecord r;
  if (!(is >> r.p >> r.W >> r.nodes >> r.What >> r.T2 >> r.h11 >> r.correction >> r.apU))
    throw Error(ErrorKind::ParseError, "malformed ledger line '" + line + "'");
  std::string extra;
  if (is >> extra) throw Error(ErrorKind::ParseError, "trailing field '" + extra + "' in ledger line");
  if (r.What != r.W + r.p * r.nodes) throw Error(ErrorKind::ParseError, "ledger line has What != W + p*nodes");
  return r;
}

std::vector<TraceRecord> read_ledger(std::istream& in) {
  std::vector<TraceRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_tsv(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "ledger line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

LedgerCache::LedgerCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    TraceRecord r = parse_tsv(line.substr(tab + 1));
    entries_[{line.substr(0, tab), r.p}] = r;
  }
}

std::optional<TraceRecord> LedgerCache::find(const std::string& spec, i64 p) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find({spec, p});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void LedgerCache::store(const std::string& spec, const TraceRecord& r) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!entries_.emplace(std::make_pair(spec, r.p), r).second) return;
  std::ofstream out(path_, std::ios::app);
  out << spec << '\t' << to_tsv(r) << '\n';
}

std::vector<PrimeOutcome> extract_range(const ProductSpec& spec, i64 bound, unsigned threads, LedgerCache* cache) {
  const DefectReport report = analyze(spec);
  const auto primes = primes_up_to(bound);
  std::vector<PrimeOutcome> out(primes.size());
  const std::string key = spec.to_string();
  // warm the locus cache before fanning out
  (void)bad_primes(spec);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      const i64 p = primes[i];
      out[i].p = p;
      if (cache)
        if (auto hit = cache->find(key, p)) {
          out[i].record = hit;
          continue;
        }
      try {
        out[i].record = extract_apU(spec, report, p);
        if (cache) cache->store(key, *out[i].record);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BadPrime && e.kind() != ErrorKind::LocationCollision) throw;
        out[i].skipped = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, primes.size())));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned k = 0; k < threads; ++k)
    pool.emplace_back([&, k] {
      try {
        worker();
      } catch (...) {
        errors[k] = std::current_exception();
        next = primes.size();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cymod
