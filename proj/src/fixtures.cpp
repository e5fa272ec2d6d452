#include "specrec/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace specrec {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

[[noreturn]] void fail(const std::string& file, std::size_t line,
                       const std::string& what) {
  throw std::runtime_error(file + ":" + std::to_string(line) + ": " + what);
}

// "p^e" with a decimal prime and exponent.
std::pair<Int, unsigned long> parse_prime_power(const std::string& file,
                                                std::size_t lineno,
                                                const std::string& token) {
  auto caret = token.find('^');
  Int base;
  unsigned long exp = 1;
  try {
    if (caret == std::string::npos) {
      base = int_from_string(token);
    } else {
      base = int_from_string(token.substr(0, caret));
      exp = std::stoul(token.substr(caret + 1));
    }
  } catch (const std::exception&) {
    fail(file, lineno, "bad factor '" + token + "'");
  }
  if (base <= 1 || exp == 0) fail(file, lineno, "bad factor '" + token + "'");
  return {base, exp};
}

// "a*b^e*c" with factors in any order; verifies each base is prime.
FactoredNat parse_factored(const std::string& file, std::size_t lineno,
                           const std::string& text) {
  std::map<Int, unsigned long> exps;
  for (const auto& token : split(text, '*')) {
    auto [base, exp] = parse_prime_power(file, lineno, token);
    if (!is_prime(base)) fail(file, lineno, "factor " + base.get_str() + " is not prime");
    exps[base] += exp;
  }
  FactoredNat out = factored_one();
  for (const auto& [p, e] : exps) out = fn_multiply(out, from_prime_power(p, e));
  return out;
}

struct Record {
  std::string kind;
  std::map<std::string, std::string> fields;
  std::size_t lineno = 0;
};

// Line format: "<kind> k=v k=v ...". A "note=" field consumes the rest of
// the line so annotations can contain spaces.
class FixtureFile {
 public:
  FixtureFile(const std::string& dir, const std::string& name,
              const std::string& schema)
      : path_(dir + "/" + name) {
    std::ifstream in(path_);
    if (!in) throw std::runtime_error("cannot open fixture " + path_);
    std::string line;
    std::size_t lineno = 0;
    bool saw_schema = false;
    while (std::getline(in, line)) {
      ++lineno;
      auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      line = line.substr(start);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (!saw_schema) {
        if (line != "schema " + schema + " v1")
          fail(path_, lineno, "expected 'schema " + schema + " v1'");
        saw_schema = true;
        continue;
      }
      records_.push_back(parse_record(line, lineno));
    }
    if (!saw_schema) throw std::runtime_error(path_ + ": missing schema line");
  }

  const std::string& path() const { return path_; }
  const std::vector<Record>& records() const { return records_; }

  const std::string& field(const Record& r, const std::string& key) const {
    auto it = r.fields.find(key);
    if (it == r.fields.end())
      fail(path_, r.lineno, "missing field '" + key + "'");
    return it->second;
  }

  std::string field_or(const Record& r, const std::string& key,
                       const std::string& fallback) const {
    auto it = r.fields.find(key);
    return it == r.fields.end() ? fallback : it->second;
  }

  unsigned long field_ulong(const Record& r, const std::string& key) const {
    try {
      return std::stoul(field(r, key));
    } catch (const std::exception&) {
      fail(path_, r.lineno, "field '" + key + "' is not a number");
    }
  }

  Int field_int(const Record& r, const std::string& key) const {
    try {
      return int_from_string(field(r, key));
    } catch (const std::exception&) {
      fail(path_, r.lineno, "field '" + key + "' is not a number");
    }
  }

 private:
  Record parse_record(const std::string& line, std::size_t lineno) {
    Record rec;
    rec.lineno = lineno;
    std::istringstream in(line);
    if (!(in >> rec.kind)) fail(path_, lineno, "empty record");
    std::string token;
    while (in >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0)
        fail(path_, lineno, "expected key=value, got '" + token + "'");
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (key == "note") {
        std::string rest;
        std::getline(in, rest);
        value += rest;
      }
      if (!rec.fields.emplace(key, value).second)
        fail(path_, lineno, "duplicate field '" + key + "'");
    }
    return rec;
  }

  std::string path_;
  std::vector<Record> records_;
};

std::vector<Table1Row> load_table1(const std::string& dir) {
  FixtureFile file(dir, "table1.txt", "table1");
  std::vector<Table1Row> rows;
  for (const auto& rec : file.records()) {
    if (rec.kind != "row") fail(file.path(), rec.lineno, "expected 'row'");
    Table1Row row;
    row.key = file.field(rec, "key");
    const std::string& family = file.field(rec, "family");
    bool known = false;
    for (Family f :
         {Family::LinearUnitary, Family::Symplectic, Family::OddDimOrthogonal,
          Family::EvenDimOrthogonalPlus, Family::EvenDimOrthogonalMinus}) {
      if (family_name(f) == family) {
        row.family = f;
        known = true;
      }
    }
    if (!known) fail(file.path(), rec.lineno, "unknown family '" + family + "'");
    for (const auto& token : split(file.field(rec, "conds"), ';'))
      if (!token.empty()) row.conditions.push_back(token);
    for (const auto& token : split(file.field(rec, "formulas"), ';'))
      if (!token.empty()) row.formulas.push_back(token);
    if (row.formulas.empty()) fail(file.path(), rec.lineno, "no formulas");
    row.abridged = file.field_or(rec, "abridged", "0") == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table2Entry> load_table2(const std::string& dir) {
  FixtureFile file(dir, "table2.txt", "table2");
  std::vector<Table2Entry> entries;
  for (const auto& rec : file.records()) {
    if (rec.kind != "entry") fail(file.path(), rec.lineno, "expected 'entry'");
    Table2Entry entry;
    entry.n = file.field_ulong(rec, "n");
    entry.column = file.field(rec, "column");
    const std::string& dims = file.field(rec, "dims");
    if (dims != "-") {
      for (const auto& token : split(dims, ',')) {
        try {
          entry.dims.push_back(std::stoul(token));
        } catch (const std::exception&) {
          fail(file.path(), rec.lineno, "bad dim '" + token + "'");
        }
      }
    }
    entry.lower = file.field_ulong(rec, "lower");
    entry.provenance = file.field(rec, "provenance");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<Table3Entry> load_table3(const std::string& dir) {
  FixtureFile file(dir, "table3.txt", "table3");
  std::vector<Table3Entry> entries;
  for (const auto& rec : file.records()) {
    if (rec.kind != "sigma") fail(file.path(), rec.lineno, "expected 'sigma'");
    Table3Entry entry;
    entry.n = file.field_ulong(rec, "n");
    entry.m = file.field_ulong(rec, "m");
    entry.bform = file.field(rec, "bform");
    if (entry.bform != "t-m" && entry.bform != "nt-m" && entry.bform != "nt-1")
      fail(file.path(), rec.lineno, "unknown bform '" + entry.bform + "'");
    const std::string& values = file.field(rec, "values");
    if (values != "-") {
      for (const auto& text : split(values, ';')) {
        entry.printed.push_back(text);
        entry.values.push_back(parse_factored(file.path(), rec.lineno, text).value);
      }
      std::sort(entry.values.begin(), entry.values.end());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<Table4Row> load_table4(const std::string& dir) {
  FixtureFile file(dir, "table4.txt", "table4");
  std::vector<Table4Row> rows;
  for (const auto& rec : file.records()) {
    if (rec.kind != "row") fail(file.path(), rec.lineno, "expected 'row'");
    Table4Row row;
    row.n = file.field_ulong(rec, "n");
    const std::string& sign = file.field(rec, "sign");
    if (sign == "+")
      row.sign = 1;
    else if (sign == "-")
      row.sign = -1;
    else
      fail(file.path(), rec.lineno, "bad sign '" + sign + "'");
    row.q = file.field_int(rec, "q");
    row.factored = parse_factored(file.path(), rec.lineno, file.field(rec, "value"));
    row.value = row.factored.value;
    row.note = file.field_or(rec, "note", "");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<KsEntry> load_table_ks(const std::string& dir) {
  FixtureFile file(dir, "table_ks.txt", "table_ks");
  std::vector<KsEntry> entries;
  for (const auto& rec : file.records()) {
    if (rec.kind != "entry") fail(file.path(), rec.lineno, "expected 'entry'");
    KsEntry entry;
    entry.row = file.field(rec, "row");
    entry.dim = file.field_ulong(rec, "dim");
    entry.u = file.field_int(rec, "u");
    for (const auto& token : split(file.field(rec, "values"), ';')) {
      try {
        entry.values.push_back(int_from_string(token));
      } catch (const std::exception&) {
        fail(file.path(), rec.lineno, "bad value '" + token + "'");
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

FixtureSet load_fixtures(const std::string& dir) {
  FixtureSet out;
  out.table1 = load_table1(dir);
  out.table2 = load_table2(dir);
  out.table3 = load_table3(dir);
  out.table4 = load_table4(dir);
  out.table_ks = load_table_ks(dir);
  return out;
}

const Table1Row& find_row(const FixtureSet& fixtures, const std::string& key) {
  for (const auto& row : fixtures.table1)
    if (row.key == key) return row;
  throw std::out_of_range("no table1 row with key '" + key + "'");
}

}  // namespace specrec
