#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace beldef {

/// Ordered set of propositional atoms. Atom i is bit i of a world index,
/// so the capacity limit bounds the 2^n universe (default 24 atoms).
/// Mutable only while a knowledge base and its queries are being parsed;
/// treated as immutable afterwards, safe for concurrent reads.
class Vocabulary {
 public:
  static constexpr std::size_t kDefaultCapacity = 24;

  explicit Vocabulary(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  /// Returns the index of `name`, registering it if new.
  /// Throws ParseError on an invalid name, CapacityError when full.
  int intern(std::string_view name);

  std::optional<int> find(std::string_view name) const;

  const std::string& name(int index) const { return atoms_.at(static_cast<std::size_t>(index)); }
  std::size_t size() const { return atoms_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::uint32_t world_count() const { return std::uint32_t{1} << atoms_.size(); }

  static bool valid_name(std::string_view name);

 private:
  std::size_t capacity_;
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace beldef
