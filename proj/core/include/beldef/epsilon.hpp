#pragma once

#include <compare>
#include <map>
#include <string>

namespace beldef {

/// Product of per-rule infinitesimal symbols with multiplicities; the
/// empty product is the unit term 1. Symbol ids are rule ids.
class EpsTerm {
 public:
  static EpsTerm unit() { return EpsTerm(); }
  static EpsTerm symbol(int id);

  EpsTerm times(const EpsTerm& other) const;
  EpsTerm times_symbol(int id) const;

  bool is_unit() const { return powers_.empty(); }
  bool contains(int id) const { return powers_.contains(id); }
  /// Multiset inclusion; equal terms are subsets of each other.
  bool subset_of(const EpsTerm& other) const;

  const std::map<int, int>& powers() const { return powers_; }

  auto operator<=>(const EpsTerm&) const = default;

  /// "1", "e2", "e1*e3", "e1^2*e3".
  std::string str() const;

 private:
  std::map<int, int> powers_;
};

}  // namespace beldef
