#include "cymod/formmatch.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cymod/modp.hpp"

namespace cymod {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

i64 to_i64(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad integer '" + tok + "'");
  }
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Smallest prime factor, or n itself.
i64 least_prime(i64 n) {
  for (i64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

}  // namespace

std::string NewformEntry::to_line() const {
  std::ostringstream os;
  os << level << ' ' << weight << ' ' << label << " :";
  i64 top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  for (i64 n = 1; n <= top; ++n) {
    auto v = a(n);
    os << ' ';
    if (v) os << *v;
    else os << '?';
  }
  return os.str();
}

std::vector<NewformEntry> parse_db(std::istream& in) {
  std::vector<NewformEntry> out;
  std::set<std::pair<i64, std::string>> seen;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) parse_fail(lineno, "missing ':'");
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    std::string lv, wt, label, extra;
    if (!(head >> lv >> wt >> label) || (head >> extra)) parse_fail(lineno, "expected 'level weight label'");
    NewformEntry e;
    e.level = to_i64(lv, lineno);
    e.weight = static_cast<int>(to_i64(wt, lineno));
    e.label = label;
    if (e.level <= 0) parse_fail(lineno, "level must be positive");
    if (e.weight != 2 && e.weight != 4) parse_fail(lineno, "weight must be 2 or 4");
    std::string tok;
    i64 n = 0;
    while (body >> tok) {
      ++n;
      if (tok == "?") continue;
      e.coeffs[n] = to_i64(tok, lineno);
    }
    if (n == 0) parse_fail(lineno, "no coefficients");
    if (auto a1 = e.a(1); a1 && *a1 != 1) parse_fail(lineno, "a1 must be 1 for a normalized form");
    if (!seen.insert({e.level, e.label}).second)
      throw Error(ErrorKind::DuplicateEntry, "line " + std::to_string(lineno) + ": " + std::to_string(e.level) + " " + e.label);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<NewformEntry> load_db(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_db(in);
}

std::string_view match_verdict_name(MatchVerdict v) {
  switch (v) {
    case MatchVerdict::Consistent: return "consistent";
    case MatchVerdict::Refuted: return "refuted";
    case MatchVerdict::Insufficient: return "insufficient";
  }
  return "?";
}

MatchReport match_sequence(const std::map<i64, i64>& traces, const std::vector<NewformEntry>& db,
                           const std::set<i64>& bad_primes, int weight) {
  MatchReport rep;
  bool enough = false;
  for (const auto& e : db) {
    if (e.weight != weight) continue;
    EntryMatch m{e.level, e.weight, e.label, {}, {}, {}, {}, MatchVerdict::Insufficient};
    for (const auto& [p, ap] : traces) {
      if (bad_primes.count(p)) m.skipped.emplace_back(p, "bad");
      else if (e.level % p == 0) m.skipped.emplace_back(p, "divides level");
      else if (auto want = e.a(p); !want) m.skipped.emplace_back(p, "not in table");
      else {
        m.compared.push_back(p);
        if (*want == ap) m.agreeing.push_back(p);
        else m.mismatches.push_back({p, *want, ap});
      }
    }
    if (!m.mismatches.empty()) m.verdict = MatchVerdict::Refuted;
    else if (static_cast<int>(m.compared.size()) >= kMinComparable) m.verdict = MatchVerdict::Consistent;
    if (static_cast<int>(m.compared.size()) >= kMinComparable) enough = true;
    rep.candidates.push_back(std::move(m));
  }
  if (!enough) throw Error(ErrorKind::InsufficientData, "fewer than 3 comparable primes for every entry");
  std::stable_sort(rep.candidates.begin(), rep.candidates.end(), [](const EntryMatch& a, const EntryMatch& b) {
    if (a.agreeing.size() != b.agreeing.size()) return a.agreeing.size() > b.agreeing.size();
    if (a.mismatches.size() != b.mismatches.size()) return a.mismatches.size() < b.mismatches.size();
    return std::tie(a.level, a.label) < std::tie(b.level, b.label);
  });
  return rep;
}

MatchReport match(const std::vector<TraceRecord>& traces, const std::vector<NewformEntry>& db,
                  const std::set<i64>& bad_primes) {
  std::map<i64, i64> seq;
  for (const auto& r : traces) seq[r.p] = r.apU;
  return match_sequence(seq, db, bad_primes, 4);
}

bool multiplicativity_check(const NewformEntry& e, i64* bad_index) {
  auto fail = [&](i64 n) {
    if (bad_index) *bad_index = n;
    return false;
  };
  for (const auto& [n, an] : e.coeffs) {
    if (n < 4) continue;
    i64 p = least_prime(n);
    i64 pk = p;
    while (n % (pk * p) == 0) pk *= p;
    if (pk != n) {
      // a_n = a_{p^k} a_{n/p^k}
      auto x = e.a(pk), y = e.a(n / pk);
      if (x && y && *x * *y != an) return fail(n);
    } else if (n == p * p) {
      auto ap = e.a(p);
      if (!ap) continue;
      i64 want = *ap * *ap - (e.level % p == 0 ? 0 : ipow(p, e.weight - 1));
      if (want != an) return fail(n);
    }
  }
  return true;
}

}  // namespace cymod
