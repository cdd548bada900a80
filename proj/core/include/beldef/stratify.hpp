#pragma once

#include <optional>
#include <span>
#include <vector>

#include "beldef/defaults.hpp"

namespace beldef {

/// Ordered partition of a base into tolerance layers. Layer 1 holds the
/// most general rules (tolerated by everything), the last layer the most
/// specific. An untolerated remainder is kept in `residue`; a nonempty
/// residue means the base admits no stratification.
struct Stratification {
  std::vector<std::vector<int>> strata;  // rule ids, layers indexed 1..k externally
  std::vector<int> residue;

  bool consistent() const { return residue.empty(); }
  std::size_t layer_count() const { return strata.size(); }
  /// 1-based layer of a rule; 0 when the rule sits in the residue.
  int layer_of(int rule_id) const;
};

/// True iff the rule's antecedent-and-consequent is jointly satisfiable
/// with the material counterparts of all rules in `context`.
bool tolerated(const Vocabulary& vocab, const DefaultRule& rule,
               std::span<const DefaultRule> context);
bool tolerated(const Vocabulary& vocab, const DefaultRule& rule, const DefaultBase& base);

/// Peels off all tolerated rules round by round, collecting maximal
/// layers. Never throws; inconsistency shows up as a nonempty residue.
Stratification stratify(const Vocabulary& vocab, const DefaultBase& base);

/// 0 when the world violates no rule, otherwise the highest layer index
/// among violated rules.
int world_rank(const Vocabulary& vocab, const DefaultBase& base, const Stratification& strat,
               World w);

/// Least world rank over the models of f; nullopt when f has none.
std::optional<int> formula_rank(const Vocabulary& vocab, const DefaultBase& base,
                                const Stratification& strat, const Formula& f);

}  // namespace beldef
