#include "hodge/report.hpp"

namespace hodge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "CERTIFIED";
    case Verdict::supported:
      return "SUPPORTED";
    case Verdict::refuted:
      return "REFUTED";
  }
  return "REFUTED";
}

bool VerdictReport::all_passed() const {
  for (const auto& c : clauses)
    if (!c.passed) return false;
  return true;
}

std::string VerdictReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.passed) return c.name;
  return {};
}

void VerdictReport::add(std::string name, bool passed, std::string detail) {
  clauses.push_back(Clause{std::move(name), passed, std::move(detail)});
}

void VerdictReport::merge(const std::string& prefix, const VerdictReport& other) {
  for (const auto& c : other.clauses) clauses.push_back(Clause{prefix + c.name, c.passed, c.detail});
}

}  // namespace hodge
