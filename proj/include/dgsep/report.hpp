#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgsep/graded.hpp"

namespace dgsep {

/// Pass/fail transcript of a family of exact checks.
struct ValidationReport {
  struct Check {
    std::string name;
    bool passed = true;
    std::string detail;  // first offending instance when failed
  };

  std::vector<Check> checks;
  std::optional<DegreeWindow> window;  // degrees actually verified, if bounded

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  /// Records a check that passed unless a failure detail was collected.
  void addFirstFailure(std::string name, const std::optional<std::string>& failure) {
    add(std::move(name), !failure.has_value(), failure.value_or(""));
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) add(prefix + c.name, c.passed, c.detail);
  }
  std::string str() const;
};

}  // namespace dgsep
