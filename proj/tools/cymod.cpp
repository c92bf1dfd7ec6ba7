// Command-line driver: catalogue, analysis, searches, point counts, matching
// and table presets.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cymod/records.hpp"
#include "cymod/tables.hpp"

using namespace cymod;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kModel = 3 };

struct RunConfig {
  std::string output = "text";
  std::string catalog;
  std::string spec;
  i64 primes = 100;
  std::string db = std::string(CYMOD_DATA_DIR) + "/forms.txt";
  std::string cache;
  std::string traces;
  std::string search_case;
  std::string left = "gamma1_6", right = "gamma1_6";
  int table = 0;
  unsigned threads = 0;
  std::string bad;
  bool no_traces = false;
};

bool records(const RunConfig& c) { return c.output == "records"; }

std::string join(const std::vector<BasePoint>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "}";
}

template <class T>
std::string join_nums(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Family family_arg(const std::string& name) {
  if (auto l = parse_label(name)) return Family::beauville(*l);
  return FibrationSpec::parse(name).family();
}

// ---- catalog

int cmd_catalog(const RunConfig& c) {
  std::vector<Family> fams;
  for (auto l : all_beauville_labels()) fams.push_back(Family::beauville(l));
  fams.push_back(Family::abg(1, 1, 16));
  fams.push_back(Family::abg(4, 4, 4));
  for (const auto& f : fams) {
    FibrationSpec s(f);
    auto locus = singular_locus(s);
    if (records(c)) {
      json fibres = json::array();
      for (const auto& sf : locus)
        fibres.push_back({{"t", sf.location},
                          {"m", sf.m},
                          {"split_disc", sf.split_disc ? json(sf.split_disc->to_string()) : json(nullptr)}});
      std::cout << json{{"family", f.to_string()}, {"fibres", fibres}}.dump() << "\n";
      continue;
    }
    std::cout << f.to_string() << "\n";
    for (const auto& sf : locus) {
      std::cout << "  " << std::setw(22) << std::left << sf.location.to_string() << " I_" << sf.m;
      if (sf.split_disc) std::cout << "  split_disc " << *sf.split_disc;
      std::cout << "\n";
    }
  }
  return kOk;
}

// ---- analyze

void print_report(const DefectReport& r) {
  std::cout << "S   = " << join(r.S) << "\n"
            << "S'  = " << join(r.S_prime) << "\n"
            << "S'' = " << join(r.S_common) << "\n"
            << "S~  = " << join(r.S_tilde) << "\n"
            << "d = " << r.d << "  Pic rank = " << r.pic_rank << "  delta = " << r.delta << "  h12 = " << r.h12
            << "  dim U = " << r.dim_U << "\n";
  for (const auto& [t, m, mp] : r.common_fibres) std::cout << "  I_" << m << " x I_" << mp << " at " << t << "\n";
  for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

int cmd_analyze(const RunConfig& c) {
  ProductSpec spec = ProductSpec::parse(c.spec);
  DefectReport r = analyze(spec);
  TraceSource src = [&](i64 p) -> std::optional<i64> {
    if (c.no_traces) return std::nullopt;
    try {
      return extract_apU(spec, r, p).apU;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  std::optional<GateReport> gate;
  std::string gate_error;
  try {
    gate = modularity_gate(spec, r, src);
  } catch (const Error& e) {
    gate_error = e.what();
  }
  if (records(c)) {
    json j = {{"product", spec.to_string()}, {"report", r}};
    if (gate) {
      json conds = json::array();
      for (int i = 0; i < 5; ++i)
        conds.push_back({{"verdict", std::string(verdict_name(gate->conditions[i]))}, {"note", gate->notes[i]}});
      j["gate"] = {{"conditions", conds}, {"modular", gate->modular}};
    }
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << spec.to_string() << "\n";
  print_report(r);
  if (r.delta == 0) {
    auto shape = lseries_shape(r);
    std::cout << "L(H^3) = L(f_4, s)";
    for (const auto& [t, mult] : shape.weight2)
      std::cout << " * L(E_" << t << ", s-1)" << (mult > 1 ? "^" + std::to_string(mult) : "");
    std::cout << "\n";
  }
  if (gate) {
    std::cout << "gate:";
    for (int i = 0; i < 5; ++i) std::cout << " (" << i + 1 << ") " << verdict_name(gate->conditions[i]);
    std::cout << "  => " << (gate->modular ? "modular" : "undecided") << "\n";
  } else {
    std::cout << "gate: " << gate_error << "\n";
  }
  return kOk;
}

// ---- search

void emit(const RunConfig& c, const Candidate& cand, const std::string& prefix = "") {
  if (records(c)) {
    std::cout << json(cand).dump() << "\n";
    return;
  }
  std::cout << prefix << cand.product.to_string() << "  delta=" << cand.report.delta << " h12=" << cand.report.h12;
  if (!cand.note.empty()) std::cout << "  [" << cand.note << "]";
  std::cout << "\n";
}

int cmd_search(const RunConfig& c) {
  const std::string& k = c.search_case;
  const bool tabular = c.table != 0 && !records(c);
  if (k == "A") {
    auto res = case_a_search();
    if (tabular) std::cout << "alpha^2\tgamma^2\tMt\th12\n";
    for (const auto& cand : res.rows) {
      if (tabular)
        std::cout << cand.alpha2->to_string() << "\t" << cand.gamma2->to_string() << "\t"
                  << cand.product.right.twist().to_function_string() << "\t" << cand.report.h12
                  << (cand.note.empty() ? "" : "\t" + cand.note) << "\n";
      else emit(c, cand);
    }
    if (!records(c)) std::cout << "# " << res.rows.size() << " classes from " << res.all_maps.size() << " maps\n";
  } else if (k == "B") {
    auto res = case_b_search();
    for (const auto& eq : res.equations) {
      const std::string verdict =
          eq.rational_roots.empty() ? "no rational solutions" : std::to_string(eq.rational_roots.size()) + " rational roots";
      if (records(c)) {
        json j{{"j_equation", eq.subset}, {"result", verdict}, {"roots", json::array()}};
        for (const auto& r : eq.rational_roots) j["roots"].push_back(r.to_string());
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "# j-equation " << eq.subset << ": " << verdict << "\n";
      }
    }
    if (tabular) std::cout << "alpha\tMt\th12\n";
    for (const auto& cand : res.rows) {
      if (tabular)
        std::cout << cand.alpha->to_string() << "\t" << cand.product.right.twist().to_function_string() << "\t"
                  << cand.report.h12 << "\n";
      else emit(c, cand);
    }
    if (!records(c)) {
      std::cout << "# alpha:";
      for (const auto& a : res.alphas) std::cout << " " << a;
      std::cout << "  degenerate:";
      for (const auto& a : res.degenerate) std::cout << " " << a;
      std::cout << "\n";
    }
  } else if (k == "C") {
    auto res = case_c_search(family_arg(c.left), family_arg(c.right));
    if (tabular) std::cout << "Mt\th12\n";
    for (const auto& cand : res.rows) {
      if (tabular) std::cout << cand.product.right.twist().to_function_string() << "\t" << cand.report.h12 << "\n";
      else emit(c, cand);
    }
    if (!records(c))
      std::cout << "# " << res.rows.size() << " fibrations, " << res.rigid_classes << " rigid (up to M ~ M^-1)\n";
  } else if (k == "iso") {
    ProductSpec spec = ProductSpec::parse(c.spec);
    bool ok = isogenous_case_check(spec);
    if (records(c)) std::cout << json{{"product", spec.to_string()}, {"isogenous_case", ok}}.dump() << "\n";
    else std::cout << spec.to_string() << ": " << (ok ? "isogenous case (#S = 4)" : "not the isogenous case") << "\n";
  } else {
    throw CLI::ValidationError("--case", "expected A, B, C or iso");
  }
  return kOk;
}

// ---- count / match

std::set<i64> parse_bad(const std::string& s) {
  std::set<i64> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.insert(std::stoll(tok));
  return out;
}

int cmd_count(const RunConfig& c) {
  ProductSpec spec = ProductSpec::parse(c.spec);
  std::optional<LedgerCache> cache;
  if (!c.cache.empty()) cache.emplace(c.cache);
  auto out = extract_range(spec, c.primes, c.threads, cache ? &*cache : nullptr);
  if (!records(c)) std::cout << ledger_header() << "\n";
  for (const auto& o : out) {
    if (records(c)) {
      json j = o.record ? json(*o.record) : json{{"p", o.p}, {"skipped", o.skipped}};
      std::cout << j.dump() << "\n";
    } else if (o.record) {
      std::cout << to_tsv(*o.record) << "\n";
    } else {
      std::cout << "# " << o.p << " skipped: " << o.skipped << "\n";
    }
  }
  return kOk;
}

void print_match(const MatchReport& rep) {
  for (const auto& m : rep.candidates) {
    std::cout << m.level << m.label << " (weight " << m.weight << "): " << match_verdict_name(m.verdict) << ", "
              << m.agreeing.size() << "/" << m.compared.size() << " agree";
    if (!m.compared.empty()) std::cout << " at p = " << join_nums(m.compared);
    for (const auto& mm : m.mismatches)
      std::cout << "; a_" << mm.p << " = " << mm.expected << " but trace " << mm.observed;
    std::cout << "\n";
  }
  std::cout << "# consistent means numerical agreement, not a proof of modularity\n";
}

int cmd_match(const RunConfig& c) {
  auto db = load_db(c.db);
  std::ifstream in(c.traces);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + c.traces);
  auto ledger = read_ledger(in);
  std::set<i64> bad = parse_bad(c.bad);
  if (!c.spec.empty()) {
    auto more = bad_prime_set(ProductSpec::parse(c.spec));
    bad.insert(more.begin(), more.end());
  }
  MatchReport rep = match(ledger, db, bad);
  if (records(c)) std::cout << json(rep).dump() << "\n";
  else print_match(rep);
  bool any_consistent = false, any_refuted = false;
  for (const auto& m : rep.candidates) {
    any_consistent |= m.verdict == MatchVerdict::Consistent;
    any_refuted |= m.verdict == MatchVerdict::Refuted;
  }
  return !any_consistent && any_refuted ? kRefuted : kOk;
}

// ---- verify

int cmd_verify(const RunConfig& c) {
  auto db = load_db(c.db);
  auto rows = load_table(table_path(c.table));
  std::optional<LedgerCache> cache;
  if (!c.cache.empty()) cache.emplace(c.cache);
  int failed = 0, passed = 0, thin = 0;
  for (const auto& row : rows) {
    RowResult r = verify_row(row, db, c.primes, c.threads, cache ? &*cache : nullptr);
    if (r.status == RowStatus::Fail) ++failed;
    else if (r.status == RowStatus::Pass) ++passed;
    else ++thin;
    if (records(c)) {
      json j = {{"level", row.level},
                {"product", row.product},
                {"h12", r.report.h12},
                {"status", std::string(row_status_name(r.status))},
                {"problems", r.problems}};
      if (r.match) j["match"] = *r.match;
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << std::setw(12) << std::left << row_status_name(r.status) << " level " << std::setw(4) << row.level
              << " h12=" << r.report.h12;
    if (r.match) std::cout << "  " << r.match->agreeing.size() << "/" << r.match->compared.size() << " primes agree";
    std::cout << "  " << row.product << "\n";
    for (const auto& p : r.problems) std::cout << "    " << p << "\n";
  }
  if (!records(c))
    std::cout << "table " << c.table << ": " << passed << " pass, " << thin << " insufficient, " << failed << " fail\n";
  return failed ? kRefuted : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibre products of rational elliptic surfaces: defects, searches, traces, matching"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--output", c.output, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--catalog", c.catalog, "alias file ('name = spec' lines)");

  auto* catalog = app.add_subcommand("catalog", "list catalogued families and their singular fibres");

  auto* analyze_cmd = app.add_subcommand("analyze", "defect, Hodge numbers and modularity conditions of a product");
  analyze_cmd->add_option("product", c.spec, "e.g. \"abg(1,1,16) x abg(4,4,4)\"")->required();
  analyze_cmd->add_flag("--no-traces", c.no_traces, "skip trace-based gate conditions");

  auto* search = app.add_subcommand("search", "twist searches");
  search->add_option("--case", c.search_case, "A, B, C or iso")->required();
  search->add_option("--left", c.left, "family for case C");
  search->add_option("--right", c.right, "family for case C");
  search->add_option("--table", c.table, "render as table")->check(CLI::Range(1, 4));
  search->add_option("product", c.spec, "product for --case iso");

  auto* count = app.add_subcommand("count", "trace ledger for primes below a bound");
  count->add_option("product", c.spec)->required();
  count->add_option("--primes", c.primes, "prime bound")->check(CLI::Range(static_cast<i64>(2), static_cast<i64>(100000)));
  count->add_option("--cache", c.cache, "ledger cache file");
  count->add_option("--threads", c.threads);

  auto* match_cmd = app.add_subcommand("match", "compare a ledger with the newform database");
  match_cmd->add_option("--db", c.db);
  match_cmd->add_option("--traces", c.traces)->required();
  match_cmd->add_option("--bad", c.bad, "extra bad primes, comma separated");
  match_cmd->add_option("--product", c.spec, "product whose bad primes are excluded");

  auto* verify = app.add_subcommand("verify", "count and match every row of a fixture table");
  verify->add_option("--table", c.table)->required()->check(CLI::Range(1, 4));
  verify->add_option("--primes", c.primes)->check(CLI::Range(static_cast<i64>(2), static_cast<i64>(100000)));
  verify->add_option("--db", c.db);
  verify->add_option("--cache", c.cache);
  verify->add_option("--threads", c.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!c.catalog.empty()) load_catalog_overrides(c.catalog);
    if (*catalog) return cmd_catalog(c);
    if (*analyze_cmd) return cmd_analyze(c);
    if (*search) return cmd_search(c);
    if (*count) return cmd_count(c);
    if (*match_cmd) return cmd_match(c);
    if (*verify) return cmd_verify(c);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument ? kUsage : kModel;
  }
  return kUsage;
}
