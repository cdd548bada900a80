#include "beldef/worlds.hpp"

#include <cassert>
#include <stdexcept>

#include "beldef/vocabulary.hpp"

namespace beldef {

namespace {

std::size_t block_count(std::size_t atom_count) {
  const std::size_t bits = std::size_t{1} << atom_count;
  return (bits + 63) / 64;
}

}  // namespace

std::string world_name(const Vocabulary& vocab, World w) {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (!w.atom(static_cast<int>(i))) out += '!';
    out += vocab.name(static_cast<int>(i));
  }
  if (out.empty()) out = "<>";
  return out;
}

WorldSet WorldSet::none(std::size_t atom_count) {
  WorldSet s;
  s.atom_count_ = atom_count;
  s.blocks_.assign(block_count(atom_count), 0);
  return s;
}

WorldSet WorldSet::all(std::size_t atom_count) {
  WorldSet s;
  s.atom_count_ = atom_count;
  s.blocks_.assign(block_count(atom_count), ~std::uint64_t{0});
  s.mask_tail();
  return s;
}

WorldSet WorldSet::atom_true(std::size_t atom_count, int i) {
  WorldSet s = none(atom_count);
  const auto bit = static_cast<std::size_t>(i);
  if (bit < 6) {
    // Within a 64-bit block the pattern repeats with period 2^(i+1).
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    for (auto& b : s.blocks_) b = kPatterns[bit];
  } else {
    for (std::size_t j = 0; j < s.blocks_.size(); ++j) {
      if ((j >> (bit - 6)) & 1u) s.blocks_[j] = ~std::uint64_t{0};
    }
  }
  s.mask_tail();
  return s;
}

void WorldSet::mask_tail() {
  const std::size_t bits = std::size_t{1} << atom_count_;
  if (bits % 64 != 0 && !blocks_.empty()) {
    blocks_.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  }
}

void WorldSet::assert_compatible(const WorldSet& other) const {
  if (atom_count_ != other.atom_count_) {
    throw std::logic_error("world sets over different universes");
  }
}

bool WorldSet::contains(World w) const {
  return (blocks_[w.index / 64] >> (w.index % 64)) & 1u;
}

void WorldSet::insert(World w) {
  blocks_[w.index / 64] |= std::uint64_t{1} << (w.index % 64);
}

std::size_t WorldSet::count() const {
  std::size_t total = 0;
  for (auto b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool WorldSet::empty() const {
  for (auto b : blocks_) {
    if (b != 0) return false;
  }
  return true;
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  assert_compatible(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i] & ~other.blocks_[i]) != 0) return false;
  }
  return true;
}

bool WorldSet::intersects(const WorldSet& other) const {
  assert_compatible(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i] & other.blocks_[i]) != 0) return true;
  }
  return false;
}

WorldSet WorldSet::operator&(const WorldSet& other) const {
  assert_compatible(other);
  WorldSet out = *this;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] &= other.blocks_[i];
  return out;
}

WorldSet WorldSet::operator|(const WorldSet& other) const {
  assert_compatible(other);
  WorldSet out = *this;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] |= other.blocks_[i];
  return out;
}

WorldSet WorldSet::operator-(const WorldSet& other) const {
  assert_compatible(other);
  WorldSet out = *this;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] &= ~other.blocks_[i];
  return out;
}

WorldSet WorldSet::complement() const {
  WorldSet out = *this;
  for (auto& b : out.blocks_) b = ~b;
  out.mask_tail();
  return out;
}

std::strong_ordering WorldSet::operator<=>(const WorldSet& other) const {
  if (auto c = atom_count_ <=> other.atom_count_; c != 0) return c;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (auto c = blocks_[i] <=> other.blocks_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<World> WorldSet::worlds() const {
  std::vector<World> out;
  out.reserve(count());
  for_each([&](World w) { out.push_back(w); });
  return out;
}

}  // namespace beldef
