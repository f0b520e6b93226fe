#include "rcd/report.hpp"

#include <algorithm>

namespace rcd {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string detail) {
  for (auto& c : checks) {
    if (c.name == name) {
      if (c.pass && !pass) c.detail = std::move(detail);
      c.pass = c.pass && pass;
      return;
    }
  }
  checks.push_back(Check{std::move(name), pass, pass ? std::string{} : std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) add(prefix + c.name, c.pass, c.detail);
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::summary() const {
  std::string s;
  for (const auto& c : checks) {
    s += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) s += " (" + c.detail + ")";
    s += '\n';
  }
  return s;
}

}  // namespace rcd
