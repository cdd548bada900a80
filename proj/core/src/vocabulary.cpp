#include "beldef/vocabulary.hpp"

#include <cctype>

#include "beldef/errors.hpp"

namespace beldef {

bool Vocabulary::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "true" || name == "false") return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(head) && name[0] != '_') return false;
  for (char c : name.substr(1)) {
    auto uc = static_cast<unsigned char>(c);
    if (!std::isalnum(uc) && c != '_') return false;
  }
  return true;
}

int Vocabulary::intern(std::string_view name) {
  if (auto existing = find(name)) return *existing;
  if (!valid_name(name)) throw ParseError("invalid atom name: " + std::string(name), 0);
  if (atoms_.size() >= capacity_) {
    throw CapacityError("vocabulary capacity of " + std::to_string(capacity_) +
                        " atoms exceeded by: " + std::string(name));
  }
  const int index = static_cast<int>(atoms_.size());
  atoms_.emplace_back(name);
  index_.emplace(atoms_.back(), index);
  return index;
}

std::optional<int> Vocabulary::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace beldef
