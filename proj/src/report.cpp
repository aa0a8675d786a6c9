#include "semient/report.hpp"

#include <algorithm>
#include <sstream>

namespace semient {

bool Report::passed() const {
  for (const auto &c : checks_)
    if (!c.passed)
      return false;
  return true;
}

bool Report::expect_equal(const std::string &name, const LinearMap &lhs, const LinearMap &rhs) {
  return expect_zero(name, lhs - rhs);
}

bool Report::expect_zero(const std::string &name, const LinearMap &f) {
  CheckResult r;
  r.name = name;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    const auto col = f.column(c);
    bool clean = true;
    for (const auto &s : col)
      clean = clean && s.is_zero();
    if (clean)
      continue;
    r.passed = false;
    r.witness = f.domain().leaf_labels(c);
    for (std::size_t row = 0; row < col.size(); ++row) {
      r.residual_labels.push_back(f.codomain().label(row));
      r.residual.push_back(col[row].to_string());
    }
    break;
  }
  checks_.push_back(std::move(r));
  return checks_.back().passed;
}

bool Report::expect(const std::string &name, bool ok, std::string note) {
  checks_.push_back(CheckResult{name, ok, {}, {}, {}, std::move(note)});
  return ok;
}

void Report::absorb(const Report &other, const std::string &prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty())
      c.name = prefix + "/" + c.name;
    checks_.push_back(std::move(c));
  }
}

Report Report::subset(std::string suite, const std::vector<std::string> &names) const {
  Report out(std::move(suite));
  for (const auto &c : checks_)
    if (std::find(names.begin(), names.end(), c.name) != names.end())
      out.checks_.push_back(c);
  return out;
}

const CheckResult *Report::find(const std::string &name) const {
  for (const auto &c : checks_)
    if (c.name == name)
      return &c;
  return nullptr;
}

const CheckResult *Report::first_failure() const {
  for (const auto &c : checks_)
    if (!c.passed)
      return &c;
  return nullptr;
}

std::vector<std::string> Report::failed_names() const {
  std::vector<std::string> out;
  for (const auto &c : checks_)
    if (!c.passed)
      out.push_back(c.name);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << (suite_.empty() ? "report" : suite_) << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto &c : checks_) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.note.empty())
      os << " (" << c.note << ")";
    os << "\n";
    if (c.passed || c.witness.empty())
      continue;
    os << "      witness: (";
    for (std::size_t i = 0; i < c.witness.size(); ++i)
      os << (i ? ", " : "") << c.witness[i];
    os << ")\n      residual:";
    for (std::size_t i = 0; i < c.residual.size(); ++i)
      if (c.residual[i] != "0")
        os << " " << c.residual[i] << "·" << c.residual_labels[i];
    os << "\n";
  }
  return os.str();
}

Report Agreement::summary(const std::string &suite) const {
  const auto verdict = [](const Report &r) { return r.passed() ? std::string("pass") : std::string("fail"); };
  Report out(suite);
  out.expect("agreement", agree(),
             first.suite() + "=" + verdict(first) + ", " + second.suite() + "=" + verdict(second));
  return out;
}

void require(const Report &report, const std::string &what) {
  if (!report.passed())
    throw PreconditionError(what, report);
}

} // namespace semient
