#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semient/linear_map.hpp"

namespace semient {

/// Outcome of one named identity or property.
struct CheckResult {
  std::string name;
  bool passed = true;
  /// Lexicographically first failing basis tuple, as leaf labels.
  std::vector<std::string> witness;
  /// Codomain labels and exact values of the residual lhs - rhs at the witness.
  std::vector<std::string> residual_labels;
  std::vector<std::string> residual;
  std::string note;
};

/// Verdict of a suite of checks. Passes iff every entry passes.
class Report {
public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string &suite() const { return suite_; }
  const std::vector<CheckResult> &checks() const { return checks_; }
  bool passed() const;
  explicit operator bool() const { return passed(); }

  /// Records lhs == rhs as maps. On failure the witness is the first domain
  /// basis element (row-major order) whose column differs.
  bool expect_equal(const std::string &name, const LinearMap &lhs, const LinearMap &rhs);
  /// Records f == 0.
  bool expect_zero(const std::string &name, const LinearMap &f);
  /// Records a property with no witness.
  bool expect(const std::string &name, bool ok, std::string note = {});

  /// Appends other's entries, prefixing their names with "<prefix>/".
  void absorb(const Report &other, const std::string &prefix = {});
  /// The named entries only, in this report's order.
  Report subset(std::string suite, const std::vector<std::string> &names) const;

  /// nullptr when absent.
  const CheckResult *find(const std::string &name) const;
  const CheckResult *first_failure() const;
  std::vector<std::string> failed_names() const;

  std::string to_text() const;

private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

/// Two verdicts claimed to coincide. The summary passes iff they agree,
/// whichever way each one went.
struct Agreement {
  Report first;
  Report second;
  bool agree() const { return first.passed() == second.passed(); }
  /// One "agreement" entry whose note records both verdicts.
  Report summary(const std::string &suite) const;
};

/// A construction or check whose stated hypotheses do not hold.
class PreconditionError : public std::runtime_error {
public:
  PreconditionError(const std::string &what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report &report() const { return report_; }

private:
  Report report_;
};

/// Throws PreconditionError when the report failed.
void require(const Report &report, const std::string &what);

} // namespace semient
