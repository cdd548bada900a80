#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace beldef {

class Vocabulary;

/// One interpretation of the vocabulary: bit i of `index` is the truth
/// value of atom i.
struct World {
  std::uint32_t index = 0;

  bool atom(int i) const { return (index >> i) & 1u; }
  auto operator<=>(const World&) const = default;
};

/// "b !f p" style rendering, atoms in vocabulary order.
std::string world_name(const Vocabulary& vocab, World w);

/// Subset of the 2^n worlds over a fixed number of atoms, as a bitset.
/// Immutable by convention once built; all operators return fresh sets.
class WorldSet {
 public:
  WorldSet() = default;

  static WorldSet none(std::size_t atom_count);
  static WorldSet all(std::size_t atom_count);
  /// Worlds where atom i holds.
  static WorldSet atom_true(std::size_t atom_count, int i);

  std::size_t atom_count() const { return atom_count_; }
  std::uint32_t universe_size() const { return std::uint32_t{1} << atom_count_; }

  bool contains(World w) const;
  void insert(World w);

  std::size_t count() const;
  bool empty() const;

  bool is_subset_of(const WorldSet& other) const;
  bool intersects(const WorldSet& other) const;

  WorldSet operator&(const WorldSet& other) const;
  WorldSet operator|(const WorldSet& other) const;
  WorldSet operator-(const WorldSet& other) const;
  WorldSet complement() const;

  bool operator==(const WorldSet& other) const = default;
  std::strong_ordering operator<=>(const WorldSet& other) const;

  /// Calls fn(World) for every member, ascending by index.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t bits = blocks_[b];
      while (bits != 0) {
        const int off = std::countr_zero(bits);
        fn(World{static_cast<std::uint32_t>(b * 64 + static_cast<std::size_t>(off))});
        bits &= bits - 1;
      }
    }
  }

  std::vector<World> worlds() const;

 private:
  void assert_compatible(const WorldSet& other) const;
  void mask_tail();

  std::size_t atom_count_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace beldef
