#pragma once

#include <string>
#include <vector>

namespace hodge {

/// One named check with its outcome and a short evidence string.
struct Clause {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Verdict { certified, supported, refuted };

std::string to_string(Verdict v);
inline bool is_positive(Verdict v) { return v != Verdict::refuted; }

struct VerdictReport {
  Verdict verdict = Verdict::refuted;
  std::vector<Clause> clauses;

  bool all_passed() const;
  /// Name of the first failing clause, or empty.
  std::string first_failure() const;
  void add(std::string name, bool passed, std::string detail = {});
  /// Appends the clauses of another report with a prefix.
  void merge(const std::string& prefix, const VerdictReport& other);
};

}  // namespace hodge
