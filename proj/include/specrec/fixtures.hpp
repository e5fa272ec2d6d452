#pragma once

#include <map>
#include <string>
#include <vector>

#include "specrec/gkgraph.hpp"
#include "specrec/intarith.hpp"

namespace specrec {

// Candidate dimension ranges per search prime and group column. `dims` empty
// means the column is ruled out for that prime (printed '-'). `lower` is the
// smallest dimension admitted by the column's hypotheses; the bound machinery
// starts its own scan there and the fixture range is cross-checked against it.
struct Table2Entry {
  unsigned long n = 0;
  std::string column;
  std::vector<unsigned long> dims;
  unsigned long lower = 0;
  std::string provenance;  // "external-classification-data" or "bound"
};

// One published candidate divisor set: the factored values for a
// (search prime, candidate dim, b-form) triple. `values` holds the evaluated
// products ascending; `printed` keeps the original factor spellings in
// published order.
struct Table3Entry {
  unsigned long n = 0;
  unsigned long m = 0;
  std::string bform;  // "t-m", "nt-m", "nt-1"
  std::vector<Int> values;
  std::vector<std::string> printed;
};

// One largest-component order from the final sweep, with its published
// factorization. `note` carries any discrepancy annotation verbatim.
struct Table4Row {
  unsigned long n = 0;
  int sign = 0;
  Int q;
  Int value;
  FactoredNat factored;
  std::string note;
};

// Pinned component-order values for the bounded rows of the main table.
struct KsEntry {
  std::string row;
  unsigned long dim = 0;
  Int u;
  std::vector<Int> values;
};

struct FixtureSet {
  std::vector<Table1Row> table1;
  std::vector<Table2Entry> table2;
  std::vector<Table3Entry> table3;
  std::vector<Table4Row> table4;
  std::vector<KsEntry> table_ks;
};

// Loads all five fixture files from `dir`. Throws std::runtime_error with the
// file and line on any malformed record.
FixtureSet load_fixtures(const std::string& dir);

// Row lookup by key; throws std::out_of_range on a miss.
const Table1Row& find_row(const FixtureSet& fixtures, const std::string& key);

}  // namespace specrec
