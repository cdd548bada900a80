#pragma once

#include <optional>
#include <vector>

#include "beldef/stratify.hpp"

namespace beldef {

/// Per-world bookkeeping against a stratification: for each layer i
/// (1-based), the ids of layer-i rules the world satisfies. Violated
/// count per layer is layer size minus the satisfied count.
std::vector<std::vector<int>> satisfied_by_layer(const Vocabulary& vocab, const DefaultBase& base,
                                                 const Stratification& strat, World w);

/// Sum over violated rules of their layer index (layer 1 costs 1).
long penalty_cost(const Vocabulary& vocab, const DefaultBase& base, const Stratification& strat,
                  World w);

/// Least penalty over the models of f; nullopt when there are none.
std::optional<long> formula_cost(const Vocabulary& vocab, const DefaultBase& base,
                                 const Stratification& strat, const Formula& f);

/// Strictly better in the lexicographic order: satisfied counts agree on
/// every layer above some i and exceed at i (layers read from the most
/// specific down).
bool lex_better(const Vocabulary& vocab, const DefaultBase& base, const Stratification& strat,
                World w1, World w2);

/// Strictly better in the preferred-subtheories order: satisfied rule
/// sets agree above some i and strictly include at i.
bool subtheory_better(const Vocabulary& vocab, const DefaultBase& base,
                      const Stratification& strat, World w1, World w2);

// The three consequence relations. All are supraclassical on consistent
// bases and collapse to classical entailment on the empty base; all
// throw InconsistentBaseError when the base has no stratification.
bool entails_penalty(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                     const Formula& beta);
bool entails_lex(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                 const Formula& beta);
bool entails_brewka(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                    const Formula& beta);

}  // namespace beldef
