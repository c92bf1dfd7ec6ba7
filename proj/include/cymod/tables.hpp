#pragma once

// Fixture tables of products with their expected level, h12 and form label,
// and the count + match pass used to check a row.

#include <string>
#include <vector>

#include "cymod/formmatch.hpp"

namespace cymod {

struct TableRow {
  i64 level = 0;
  int h12 = 0;
  std::string form;  // label in the form database, "-" when none
  std::string product;
  int line = 0;
};

// Lines "level | h12 | form | product"; '#' starts a comment.
std::vector<TableRow> load_table(const std::string& path);
std::string table_path(int n);  // bundled fixture for table n

enum class RowStatus { Pass, Fail, Insufficient };
std::string_view row_status_name(RowStatus s);

struct RowResult {
  TableRow row;
  DefectReport report;
  std::vector<PrimeOutcome> outcomes;
  std::optional<EntryMatch> match;  // against the row's own form
  RowStatus status = RowStatus::Insufficient;
  std::vector<std::string> problems;
};

// Analyzes the product, extracts traces for p < bound and compares them with
// the row's form. Fail on any h12/delta/coefficient disagreement; Insufficient
// when fewer than three primes could be compared.
RowResult verify_row(const TableRow& row, const std::vector<NewformEntry>& db, i64 bound, unsigned threads = 0,
                     LedgerCache* cache = nullptr);

}  // namespace cymod
