#pragma once

// Newform coefficient tables and comparison against extracted traces.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cymod/frobenius.hpp"

namespace cymod {

struct NewformEntry {
  i64 level = 0;
  int weight = 4;
  std::string label;
  std::map<i64, i64> coeffs;  // a_n for known n; '?' entries are absent

  std::optional<i64> a(i64 n) const {
    auto it = coeffs.find(n);
    if (it == coeffs.end()) return std::nullopt;
    return it->second;
  }
  std::string to_line() const;
  friend bool operator==(const NewformEntry&, const NewformEntry&) = default;
};

// Lines "level weight label : a1 a2 a3 ..." ('?' = unknown, '#' comments).
std::vector<NewformEntry> parse_db(std::istream& in);
std::vector<NewformEntry> load_db(const std::string& path);

enum class MatchVerdict { Consistent, Refuted, Insufficient };
std::string_view match_verdict_name(MatchVerdict v);

struct Mismatch {
  i64 p, expected, observed;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct EntryMatch {
  i64 level = 0;
  int weight = 4;
  std::string label;
  std::vector<i64> compared;
  std::vector<i64> agreeing;
  std::vector<std::pair<i64, std::string>> skipped;  // "bad", "divides level", "not in table"
  std::vector<Mismatch> mismatches;
  MatchVerdict verdict = MatchVerdict::Insufficient;
  friend bool operator==(const EntryMatch&, const EntryMatch&) = default;
};

struct MatchReport {
  std::vector<EntryMatch> candidates;  // ranked
  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

inline constexpr int kMinComparable = 3;

// Compares a trace sequence p -> a_p with every entry of the given weight.
// Throws InsufficientData when no entry has kMinComparable comparable primes.
MatchReport match_sequence(const std::map<i64, i64>& traces, const std::vector<NewformEntry>& db,
                           const std::set<i64>& bad_primes, int weight = 4);
MatchReport match(const std::vector<TraceRecord>& traces, const std::vector<NewformEntry>& db,
                  const std::set<i64>& bad_primes);

// Hecke sanity on the stored coefficients. On failure the offending index is
// written to *bad_index.
bool multiplicativity_check(const NewformEntry& e, i64* bad_index = nullptr);

}  // namespace cymod
