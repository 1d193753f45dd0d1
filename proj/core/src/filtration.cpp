#include "hodge/filtration.hpp"

#include <sstream>

#include "hodge/error.hpp"

namespace hodge {

Filtration::Filtration(std::size_t ambient, Direction dir, std::map<int, Subspace> steps)
    : ambient_(ambient), dir_(dir) {
  for (const auto& [k, s] : steps)
    if (s.ambient_dim() != ambient) throw ValidationError("filtration step has wrong ambient dimension");
  if (ambient == 0) return;
  if (steps.empty()) throw ValidationError("filtration is not exhaustive");
  const Subspace* prev = nullptr;
  for (const auto& [k, s] : steps) {
    if (prev) {
      bool nested = dir == Direction::increasing ? s.contains(*prev) : prev->contains(s);
      if (!nested) throw ValidationError("filtration steps are not nested");
    }
    prev = &s;
  }
  if (dir == Direction::increasing) {
    if (!steps.rbegin()->second.is_full()) throw ValidationError("filtration is not exhaustive");
    Subspace last = Subspace::zero(ambient);
    for (auto& [k, s] : steps) {
      if (s == last) continue;
      last = s;
      steps_.emplace(k, std::move(s));
    }
  } else {
    if (!steps.begin()->second.is_full()) throw ValidationError("filtration is not exhaustive");
    Subspace next = Subspace::zero(ambient);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (it->second == next) continue;
      next = it->second;
      steps_.emplace(it->first, it->second);
    }
  }
}

Filtration Filtration::concentrated(std::size_t ambient, Direction dir, int k) {
  return Filtration(ambient, dir, {{k, Subspace::full(ambient)}});
}

Subspace Filtration::at(int k) const {
  if (dir_ == Direction::increasing) {
    auto it = steps_.upper_bound(k);
    if (it == steps_.begin()) return Subspace::zero(ambient_);
    return std::prev(it)->second;
  }
  auto it = steps_.lower_bound(k);
  if (it == steps_.end()) return ambient_ == 0 ? Subspace::full(0) : Subspace::zero(ambient_);
  return it->second;
}

std::vector<int> Filtration::jumps() const {
  std::vector<int> out;
  for (const auto& [k, s] : steps_) out.push_back(k);
  return out;
}

int Filtration::lowest() const { return steps_.empty() ? 0 : steps_.begin()->first; }
int Filtration::highest() const { return steps_.empty() ? 0 : steps_.rbegin()->first; }

Subquotient Filtration::graded(int k) const {
  if (dir_ == Direction::increasing) return Subquotient(at(k), at(k - 1));
  return Subquotient(at(k), at(k + 1));
}

Filtration Filtration::reindexed(int offset) const {
  std::map<int, Subspace> s;
  for (const auto& [k, v] : steps_) s.emplace(k + offset, v);
  return Filtration(ambient_, dir_, std::move(s));
}

Filtration Filtration::transformed(const Matrix& g) const {
  std::map<int, Subspace> s;
  for (const auto& [k, v] : steps_) s.emplace(k, apply(g, v));
  return Filtration(g.rows(), dir_, std::move(s));
}

Filtration Filtration::conj() const {
  std::map<int, Subspace> s;
  for (const auto& [k, v] : steps_) s.emplace(k, v.conj());
  return Filtration(ambient_, dir_, std::move(s));
}

Filtration Filtration::induced(const Subquotient& sq) const {
  std::map<int, Subspace> s;
  for (const auto& [k, v] : steps_) s.emplace(k, sq.induced(v));
  if (sq.dim() == 0) s.clear();
  return Filtration(sq.dim(), dir_, std::move(s));
}

bool Filtration::is_rational() const {
  for (const auto& [k, v] : steps_)
    if (!v.is_rational()) return false;
  return true;
}

std::string to_string(const Filtration& f) {
  std::ostringstream os;
  os << (f.direction() == Direction::increasing ? "W{" : "F{");
  bool first = true;
  for (const auto& [k, s] : f.steps()) {
    if (!first) os << ", ";
    first = false;
    os << k << ":" << s.dim();
  }
  os << "}";
  return os.str();
}

}  // namespace hodge
