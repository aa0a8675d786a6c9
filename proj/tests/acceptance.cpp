// One line per acceptance criterion, aggregated from the suite rows. Exit 0
// iff every criterion passes.

#include <iostream>
#include <map>

#include "semient/suite.hpp"

int main() {
  using namespace semient;
  const std::filesystem::path data = default_data_dir();
  const Grid grid = Grid::load(data / "grids" / "default.json");
  const SuiteResult result = run_suite(grid, data / "registry", Field::rationals());

  std::map<int, std::vector<const RowResult *>> by_criterion;
  for (const auto &row : result.rows)
    by_criterion[row.criterion].push_back(&row);

  bool all = true;
  for (int c = 1; c <= 10; ++c) {
    const auto it = by_criterion.find(c);
    const bool present = it != by_criterion.end();
    bool ok = present;
    std::size_t checks = 0;
    if (present)
      for (const RowResult *r : it->second) {
        ok = ok && r->report.passed();
        checks += r->report.checks().size();
      }
    all = all && ok;
    std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << "  (" << (present ? it->second.size() : 0)
              << " rows, " << checks << " checks)\n";
    if (present && !ok)
      for (const RowResult *r : it->second)
        for (const auto &name : r->report.failed_names())
          std::cout << "    " << r->id << ": " << name << "\n";
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
