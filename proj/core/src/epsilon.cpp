#include "beldef/epsilon.hpp"

namespace beldef {

EpsTerm EpsTerm::symbol(int id) {
  EpsTerm t;
  t.powers_[id] = 1;
  return t;
}

EpsTerm EpsTerm::times(const EpsTerm& other) const {
  EpsTerm t = *this;
  for (const auto& [id, k] : other.powers_) t.powers_[id] += k;
  return t;
}

EpsTerm EpsTerm::times_symbol(int id) const {
  EpsTerm t = *this;
  t.powers_[id] += 1;
  return t;
}

bool EpsTerm::subset_of(const EpsTerm& other) const {
  for (const auto& [id, k] : powers_) {
    auto it = other.powers_.find(id);
    if (it == other.powers_.end() || it->second < k) return false;
  }
  return true;
}

std::string EpsTerm::str() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& [id, k] : powers_) {
    if (!out.empty()) out += '*';
    out += 'e' + std::to_string(id);
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace beldef
