#include "beldef/mass.hpp"

#include <algorithm>
#include <vector>

#include "beldef/errors.hpp"

namespace beldef {

MassAssignment::Builder& MassAssignment::Builder::add(const WorldSet& focal, const Rational& mass) {
  if (mass == 0) return *this;
  auto [it, inserted] = entries_.emplace(focal, mass);
  if (!inserted) {
    it->second += mass;
    if (it->second == 0) entries_.erase(it);
  }
  return *this;
}

MassAssignment MassAssignment::Builder::build() && {
  Rational total = 0;
  for (const auto& [focal, mass] : entries_) {
    if (focal.empty()) throw DegenerateMassError("mass assigned to the empty set");
    if (mass < 0) throw DegenerateMassError("negative mass");
    total += mass;
  }
  if (total != 1) throw DegenerateMassError("masses sum to " + to_string(total) + ", not 1");
  return MassAssignment(atom_count_, std::move(entries_));
}

MassAssignment MassAssignment::vacuous(std::size_t atom_count) {
  return std::move(Builder(atom_count).add(WorldSet::all(atom_count), 1)).build();
}

Rational MassAssignment::belief(const WorldSet& a) const {
  Rational total = 0;
  for (const auto& [focal, mass] : entries_) {
    if (focal.is_subset_of(a)) total += mass;
  }
  return total;
}

Rational MassAssignment::plausibility(const WorldSet& a) const {
  Rational total = 0;
  for (const auto& [focal, mass] : entries_) {
    if (focal.intersects(a)) total += mass;
  }
  return total;
}

MassAssignment simple_support(const WorldSet& s, const Rational& e) {
  if (s.empty()) throw DegenerateMassError("simple support on the empty set");
  if (!(e > 0 && e < 1)) {
    throw DegenerateMassError("simple support weight outside (0,1): " + to_string(e));
  }
  MassAssignment::Builder b(s.atom_count());
  b.add(s, 1 - e);
  b.add(WorldSet::all(s.atom_count()), e);
  return std::move(b).build();
}

bool is_consonant(const MassAssignment& m) {
  std::vector<const WorldSet*> focals;
  focals.reserve(m.focals().size());
  for (const auto& [focal, _] : m.focals()) focals.push_back(&focal);
  std::sort(focals.begin(), focals.end(),
            [](const WorldSet* a, const WorldSet* b) { return a->count() < b->count(); });
  for (std::size_t i = 0; i + 1 < focals.size(); ++i) {
    if (!focals[i]->is_subset_of(*focals[i + 1])) return false;
  }
  return true;
}

ConditionalBelief condition(const MassAssignment& m, const WorldSet& a) {
  if (m.plausibility(a) == 0) {
    throw DegenerateMassError("conditioning on a zero-plausibility event");
  }
  WorldSet ac = a.complement();
  const Rational denominator = 1 - m.belief(ac);
  return ConditionalBelief(m, std::move(ac), denominator);
}

Rational ConditionalBelief::belief(const WorldSet& x) const {
  return (m_.belief(x | a_complement_) - m_.belief(a_complement_)) / denominator_;
}

Rational ConditionalBelief::plausibility(const WorldSet& x) const {
  return 1 - belief(x.complement());
}

MassAssignment combine(const MassAssignment& m1, const MassAssignment& m2) {
  if (m1.atom_count() != m2.atom_count()) {
    throw DegenerateMassError("combining assignments over different universes");
  }
  std::map<WorldSet, Rational> raw;
  Rational conflict = 0;
  for (const auto& [b, mb] : m1.focals()) {
    for (const auto& [c, mc] : m2.focals()) {
      WorldSet meet = b & c;
      const Rational product = mb * mc;
      if (meet.empty()) {
        conflict += product;
      } else {
        raw[std::move(meet)] += product;
      }
    }
  }
  const Rational scale = 1 - conflict;
  if (scale == 0) throw DegenerateMassError("total conflict in combination");
  MassAssignment::Builder out(m1.atom_count());
  for (auto& [focal, mass] : raw) out.add(focal, mass / scale);
  return std::move(out).build();
}

}  // namespace beldef
