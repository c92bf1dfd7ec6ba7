#pragma once

// Fibre products W = Y x_{P^1} Y' of two rational elliptic fibrations: the
// singular-locus bookkeeping, Hodge invariants and the modularity criteria.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cymod/catalog.hpp"
#include "cymod/linalg.hpp"

namespace cymod {

struct ProductSpec {
  FibrationSpec left, right;
  bool isogenous = false;
  std::set<i64> known_bad_primes;

  ProductSpec(FibrationSpec l, FibrationSpec r, bool iso = false) : left(std::move(l)), right(std::move(r)), isogenous(iso) {}
  // "<spec> x <spec>[; isogenous][; bad=3,7]"
  static ProductSpec parse(std::string_view text);
  std::string to_string() const;
  // Both sides twisted by the same map.
  ProductSpec twisted(const Moebius& n) const;
};

enum class Side { Left, Right };

struct TildeFibre {
  BasePoint t;
  int gamma = 0;  // b(t) * b'(t), with b = 1 on the smooth side
  Side singular_side = Side::Left;
  friend bool operator==(const TildeFibre&, const TildeFibre&) = default;
};

struct DefectReport {
  std::vector<BasePoint> S, S_prime, S_common, S_tilde;
  int d = 0;
  int pic_rank = 0;
  int delta = 0;
  int h12 = 0;
  int dim_U = 0;
  std::vector<TildeFibre> tilde_fibres;
  // Common fibres as (t, m, m').
  std::vector<std::tuple<BasePoint, int, int>> common_fibres;
  std::vector<std::string> warnings;
  friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

DefectReport analyze(const ProductSpec& spec);

// Delta recomputed from h12 and the S-tilde fibres; equals report.delta.
int delta_from_hodge(const DefectReport& r);
// h12 recomputed from the raw counts.
int schoen_h12(const DefectReport& r);

// Intersection form on the cycles A^1, B^1, ..., A^{g-1}, B^{g-1} of an I_g x I_0 fibre.
IntMatrix intersection_matrix(int gamma);
inline int u_dimension(const DefectReport& r) { return 2 * r.delta + 2; }

// L(H^3) = L(f_4, s) * prod (L(E_t, s - 1))^{mult}.
struct LSeriesShape {
  std::vector<std::pair<BasePoint, int>> weight2;
  int weight2_total() const;
};
LSeriesShape lseries_shape(const DefectReport& r);

// Pair matches a catalogued isogenous pattern (self-pairing, or the
// Gamma0(8)/Gamma1(4) pencil with t -> (t-1)/(t+1)).
bool known_isogenous(const ProductSpec& spec);

struct BadPrimeInfo {
  i64 p;
  std::string reason;
  bool heuristic = true;  // false for user annotations
};
// Heuristic bad primes with provenance, plus the annotations; sorted by p.
std::vector<BadPrimeInfo> bad_primes(const ProductSpec& spec);
std::set<i64> bad_prime_set(const ProductSpec& spec);

enum class Verdict { Pass, Fail, Unknown };
std::string_view verdict_name(Verdict v);

using TraceSource = std::function<std::optional<i64>(i64 p)>;

struct GateReport {
  // Conditions (1)..(5) in order.
  std::array<Verdict, 5> conditions{Verdict::Unknown, Verdict::Unknown, Verdict::Unknown, Verdict::Unknown,
                                    Verdict::Unknown};
  std::array<std::string, 5> notes;
  bool modular = false;
};

GateReport modularity_gate(const ProductSpec& spec, const DefectReport& r, const TraceSource& traces,
                           i64 prime_bound = 100);

}  // namespace cymod
