#pragma once

#include <map>

#include "beldef/rational.hpp"
#include "beldef/worlds.hpp"

namespace beldef {

/// Basic belief assignment over subsets of the 2^n universe, with exact
/// rational masses. Invariants: no mass on the empty set, no zero
/// entries (focal elements are exactly the keys), masses sum to 1.
/// Immutable after construction; all queries are pure.
class MassAssignment {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t atom_count) : atom_count_(atom_count) {}
    /// Accumulates mass on a focal candidate; entries merge.
    Builder& add(const WorldSet& focal, const Rational& mass);
    /// Validates the invariants and freezes. Throws on negative mass,
    /// mass on the empty set, or a total different from 1.
    MassAssignment build() &&;

   private:
    std::size_t atom_count_;
    std::map<WorldSet, Rational> entries_;
  };

  static MassAssignment vacuous(std::size_t atom_count);

  std::size_t atom_count() const { return atom_count_; }
  const std::map<WorldSet, Rational>& focals() const { return entries_; }

  Rational belief(const WorldSet& a) const;
  Rational plausibility(const WorldSet& a) const;

 private:
  MassAssignment(std::size_t atom_count, std::map<WorldSet, Rational> entries)
      : atom_count_(atom_count), entries_(std::move(entries)) {}

  std::size_t atom_count_ = 0;
  std::map<WorldSet, Rational> entries_;
};

/// Mass 1-e on s, e on the universe. Requires 0 < e < 1 and s nonempty;
/// s equal to the universe collapses to the vacuous assignment.
MassAssignment simple_support(const WorldSet& s, const Rational& e);

/// True iff the focal elements form a chain under inclusion.
bool is_consonant(const MassAssignment& m);

/// Evaluator for beliefs revised by the evidence "the world is in A":
///   bel(X|A) = (bel(X | A^c) - bel(A^c)) / (bel(universe) - bel(A^c))
/// with X | A^c the set union. Built by condition(); requires pl(A) > 0.
class ConditionalBelief {
 public:
  Rational belief(const WorldSet& x) const;
  Rational plausibility(const WorldSet& x) const;

 private:
  friend ConditionalBelief condition(const MassAssignment& m, const WorldSet& a);
  ConditionalBelief(MassAssignment m, WorldSet a_complement, Rational denominator)
      : m_(std::move(m)), a_complement_(std::move(a_complement)),
        denominator_(std::move(denominator)) {}

  MassAssignment m_;  // owned; the evaluator may outlive its source
  WorldSet a_complement_;
  Rational denominator_;
};

/// Throws DegenerateMassError when pl(A) = 0.
ConditionalBelief condition(const MassAssignment& m, const WorldSet& a);

/// Dempster's rule of combination, normalized. Throws
/// DegenerateMassError on total conflict.
MassAssignment combine(const MassAssignment& m1, const MassAssignment& m2);

}  // namespace beldef
