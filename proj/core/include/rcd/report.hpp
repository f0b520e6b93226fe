#pragma once

#include <string>
#include <vector>

namespace rcd {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

// Named pass/fail checks with an optional witness in detail.
struct Report {
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, std::string detail = {});
  // Later results for the same name are folded in: pass is and-ed, the first
  // failing detail is kept.
  void merge(const Report& other, const std::string& prefix = {});
  const Check* find(const std::string& name) const;
  std::string summary() const;
};

}  // namespace rcd
