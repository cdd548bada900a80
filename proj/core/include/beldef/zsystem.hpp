#pragma once

#include <vector>

#include "beldef/order.hpp"
#include "beldef/stratify.hpp"
#include "beldef/worlds.hpp"

namespace beldef {

/// Least-committed consonant structure compiled from a base: a strictly
/// increasing chain of world sets, innermost the models of all material
/// counterparts, with symbolic masses 1-e1, e1-e2, ..., and the rules
/// newly satisfied at each step. The satisfied layers coincide with the
/// tolerance strata.
struct ConsonantEbf {
  std::vector<WorldSet> chain;          // chain[0] innermost
  std::vector<std::vector<int>> layers; // rule ids satisfied per step

  /// Symbolic plausibility level of a world: 0 inside the innermost set,
  /// j in ring j, layer-count outside the whole chain.
  int level(World w) const;
};

/// Iterative least-commitment construction. Throws InconsistentBaseError
/// when some round satisfies no remaining rule.
ConsonantEbf lc_build(const Vocabulary& vocab, const DefaultBase& base);

/// Rank-based entailment: the best models of alpha-and-beta sit strictly
/// below the best models of alpha-and-not-beta. Unsatisfiable alpha
/// entails everything. Throws InconsistentBaseError.
bool entails_z(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
               const Formula& beta);

/// Same relation decided through the consonant chain: world levels are
/// mapped to chain epsilon symbols and compared with the symbolic
/// order engine.
bool entails_lc(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                const Formula& beta);

/// Preferential (system P) entailment via the consistency reduction:
/// alpha entails beta iff alpha is unsatisfiable or adding the rule
/// alpha ~> !beta leaves no stratification. Throws when `base` itself is
/// inconsistent.
bool entails_p(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
               const Formula& beta);

}  // namespace beldef
