#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace lext {

struct CheckLine {
  std::string label;
  bool passed;
  std::string detail;
};

/// Ordered list of named exact checks.
struct Report {
  std::vector<CheckLine> checks;
  /// Informational lines; never affect passed().
  std::vector<std::string> notes;

  void add(std::string label, bool passed, std::string detail = {}) {
    checks.push_back({std::move(label), passed, std::move(detail)});
  }
  void note(std::string line) { notes.push_back(std::move(line)); }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
  bool passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
  }
};

}  // namespace lext
