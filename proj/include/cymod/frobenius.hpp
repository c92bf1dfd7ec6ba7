#pragma once

// Point counts over F_p and the extraction of the Frobenius trace on the
// two-dimensional piece U of H^3 of a fibre product.

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cymod/defect.hpp"
#include "cymod/modp.hpp"

namespace cymod {

inline i64 count_cubic(const CubicModP& g) { return g.count_points(); }

struct LocalTrace {
  i64 t = 0;  // index in P^1(F_p)
  int a = 0;
  bool multiplicative = false;
  int m = 0;              // I_m, 0 for smooth fibres
  int fixed_components = 1;
  int rational_nodes = 0;
  // Rational nodes weighted by the Frobenius sign on their branches: m when
  // split, -1 (odd m) or 0 (even m) when non-split.
  int node_weight = 0;
  i64 fibre_count = 0;    // points on the fibre of the smooth model
};

// Local data of every fibre of one fibration over P^1(F_p).
class FibrationModP {
 public:
  FibrationModP(const FibrationSpec& spec, i64 p);
  i64 prime() const { return p_; }
  const LocalTrace& at(i64 t_index) const { return local_[t_index]; }
  const std::vector<LocalTrace>& all() const { return local_; }

 private:
  i64 p_;
  std::vector<LocalTrace> local_;
};

LocalTrace local_trace(const FibrationSpec& spec, i64 t_index, i64 p);

// a_p of the smooth fibre over a rational base point.
i64 ap_elliptic(const FibrationSpec& spec, const ProjPoint<Rational>& t, i64 p);

struct ProductCount {
  i64 W = 0;
  i64 nodes = 0;  // sum of node_weight products over common singular fibres
};
ProductCount count_product(const ProductSpec& spec, i64 p);

struct HodgeModel {
  int euler = 0;
  int h11 = 0;
  int h12 = 0;
};
HodgeModel hodge_model(const DefectReport& r);

struct TraceRecord {
  i64 p = 0;
  i64 W = 0;
  i64 nodes = 0;
  i64 What = 0;
  i64 T2 = 0;
  int h11 = 0;
  i64 correction = 0;
  i64 apU = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

// Tab-separated "p W nodes What T2 h11 correction apU".
std::string ledger_header();
std::string to_tsv(const TraceRecord& r);
TraceRecord parse_tsv(const std::string& line);
std::vector<TraceRecord> read_ledger(std::istream& in);

TraceRecord extract_apU(const ProductSpec& spec, i64 p);
TraceRecord extract_apU(const ProductSpec& spec, const DefectReport& report, i64 p);

// Ledgers keyed by (product text, p); one "spec<TAB>record" line each.
class LedgerCache {
 public:
  explicit LedgerCache(std::string path);
  std::optional<TraceRecord> find(const std::string& spec, i64 p) const;
  void store(const std::string& spec, const TraceRecord& r);

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, i64>, TraceRecord> entries_;
};

struct PrimeOutcome {
  i64 p = 0;
  std::optional<TraceRecord> record;
  std::string skipped;  // reason when no record
};

// Ledgers for all primes p < bound, ascending; bad primes are skipped with
// their reason. Work is spread over `threads` workers (0 = hardware).
std::vector<PrimeOutcome> extract_range(const ProductSpec& spec, i64 bound, unsigned threads = 0,
                                        LedgerCache* cache = nullptr);

}  // namespace cymod
