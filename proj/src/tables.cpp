#include "cymod/tables.hpp"

#include <fstream>
#include <sstream>

namespace cymod {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::vector<TableRow> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '|')) cols.push_back(trim(col));
    if (cols.size() != 4)
      throw Error(ErrorKind::ParseError, path + " line " + std::to_string(lineno) + ": expected 4 columns");
    TableRow r;
    try {
      r.level = std::stoll(cols[0]);
      r.h12 = std::stoi(cols[1]);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, path + " line " + std::to_string(lineno) + ": bad level or h12");
    }
    r.form = cols[2];
    r.product = cols[3];
    r.line = lineno;
    out.push_back(std::move(r));
  }
  return out;
}

std::string table_path(int n) { return std::string(CYMOD_DATA_DIR) + "/tables/table" + std::to_string(n) + ".txt"; }

std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Insufficient: return "insufficient";
  }
  return "?";
}

RowResult verify_row(const TableRow& row, const std::vector<NewformEntry>& db, i64 bound, unsigned threads,
                     LedgerCache* cache) {
  RowResult res;
  res.row = row;
  ProductSpec spec = ProductSpec::parse(row.product);
  res.report = analyze(spec);
  if (res.report.delta != 0) res.problems.push_back("delta = " + std::to_string(res.report.delta));
  if (res.report.h12 != row.h12)
    res.problems.push_back("h12 = " + std::to_string(res.report.h12) + ", expected " + std::to_string(row.h12));

  if (res.report.delta == 0) res.outcomes = extract_range(spec, bound, threads, cache);

  if (row.form != "-") {
    std::vector<NewformEntry> own;
    for (const auto& e : db)
      if (e.level == row.level && e.label == row.form && e.weight == 4) own.push_back(e);
    if (own.empty()) {
      res.problems.push_back("form " + std::to_string(row.level) + row.form + " not in database");
    } else {
      std::map<i64, i64> seq;
      for (const auto& o : res.outcomes)
        if (o.record) seq[o.p] = o.record->apU;
      const std::set<i64> bad = bad_prime_set(spec);
      try {
        res.match = match_sequence(seq, own, bad).candidates.front();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientData) throw;
        // Keep the per-prime bookkeeping even when too few primes compare.
        EntryMatch m{row.level, 4, row.form, {}, {}, {}, {}, MatchVerdict::Insufficient};
        for (const auto& [p, ap] : seq) {
          auto want = own.front().a(p);
          if (!want || bad.count(p) || row.level % p == 0) continue;
          m.compared.push_back(p);
          if (*want == ap) m.agreeing.push_back(p);
          else m.mismatches.push_back({p, *want, ap});
        }
        if (!m.mismatches.empty()) m.verdict = MatchVerdict::Refuted;
        res.match = m;
      }
      if (res.match->verdict == MatchVerdict::Refuted) {
        for (const auto& mm : res.match->mismatches)
          res.problems.push_back("a_" + std::to_string(mm.p) + " = " + std::to_string(mm.observed) + ", expected " +
                                 std::to_string(mm.expected));
      }
    }
  }
  if (!res.problems.empty()) res.status = RowStatus::Fail;
  else if (res.match && res.match->verdict == MatchVerdict::Consistent) res.status = RowStatus::Pass;
  else if (row.form == "-") res.status = RowStatus::Pass;
  else res.status = RowStatus::Insufficient;
  return res;
}

}  // namespace cymod
