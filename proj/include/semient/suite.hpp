#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "semient/format.hpp"

namespace semient {

/// Which rows to run and with which registry names and parameter ranges.
///
///   {"format": 1, "rows": [...ids], "tags": [...], "params": {"<row id>": {...}}}
///
/// A row runs when it is listed in "rows" (or "rows" is absent) and carries at
/// least one of "tags" (or "tags" is absent).
class Grid {
public:
  static Grid parse(const std::string &text);
  static Grid load(const std::filesystem::path &path);

  bool selects(const std::string &row_id, const std::vector<std::string> &row_tags) const;
  /// Throws InputError when the grid has no parameters for the row.
  const Json &params(const std::string &row_id) const;
  const Json &json() const { return doc_; }

private:
  Json doc_;
};

struct RowContext {
  const StructureFile &registry;
  const Json &params;
  const Grid &grid;
  const std::filesystem::path &registry_dir;
  /// Worker threads a row may use for nested runs.
  unsigned jobs = 1;
};

struct RowSpec {
  std::string id;
  int criterion;
  std::vector<std::string> tags;
  std::string title;
  Report (*run)(const RowContext &);
};

/// Every row, ordered by criterion.
const std::vector<RowSpec> &suite_rows();

struct RowResult {
  std::string id;
  int criterion;
  std::string title;
  Report report;
};

struct SuiteResult {
  Field field;
  std::vector<RowResult> rows;
  bool passed() const;
  /// One PASS/FAIL line per row with failing entries, then a count summary.
  std::string to_text() const;
  Json to_json() const;
};

/// Runs the selected rows over the registry loaded in `field`. Rows run on up
/// to `jobs` threads; results keep the row order.
SuiteResult run_suite(const Grid &grid, const std::filesystem::path &registry_dir, const Field &field,
                      unsigned jobs = 1);

std::filesystem::path default_data_dir();

} // namespace semient
