#include "beldef/alt_orders.hpp"

#include <algorithm>
#include <map>

#include "beldef/errors.hpp"

namespace beldef {

std::vector<std::vector<int>> satisfied_by_layer(const Vocabulary&, const DefaultBase& base,
                                                 const Stratification& strat, World w) {
  std::vector<std::vector<int>> out(strat.layer_count());
  for (const auto& rule : base.rules()) {
    if (material(rule).evaluate(w)) {
      const int layer = strat.layer_of(rule.id);
      if (layer > 0) out[static_cast<std::size_t>(layer - 1)].push_back(rule.id);
    }
  }
  return out;
}

long penalty_cost(const Vocabulary&, const DefaultBase& base, const Stratification& strat,
                  World w) {
  long cost = 0;
  for (const auto& rule : base.rules()) {
    if (!material(rule).evaluate(w)) cost += strat.layer_of(rule.id);
  }
  return cost;
}

std::optional<long> formula_cost(const Vocabulary& vocab, const DefaultBase& base,
                                 const Stratification& strat, const Formula& f) {
  std::optional<long> best;
  models(f, vocab).for_each([&](World w) {
    const long c = penalty_cost(vocab, base, strat, w);
    if (!best || c < *best) best = c;
  });
  return best;
}

namespace {

Stratification checked_stratify(const Vocabulary& vocab, const DefaultBase& base) {
  Stratification strat = stratify(vocab, base);
  if (!strat.consistent()) throw InconsistentBaseError("base has no stratification");
  return strat;
}

// Satisfied counts from the most specific layer down.
std::vector<std::size_t> lex_key(const Vocabulary& vocab, const DefaultBase& base,
                                 const Stratification& strat, World w) {
  const auto sat = satisfied_by_layer(vocab, base, strat, w);
  std::vector<std::size_t> key;
  key.reserve(sat.size());
  for (auto it = sat.rbegin(); it != sat.rend(); ++it) key.push_back(it->size());
  return key;
}

// Lexicographic-by-inclusion comparison of two satisfaction profiles,
// most specific layer first. The per-layer sets are sorted by rule id,
// so strict superset at the first difference decides.
bool profile_better(const std::vector<std::vector<int>>& sat1,
                    const std::vector<std::vector<int>>& sat2) {
  for (std::size_t i = sat1.size(); i-- > 0;) {
    if (sat1[i] == sat2[i]) continue;
    return sat1[i].size() > sat2[i].size() &&
           std::includes(sat1[i].begin(), sat1[i].end(), sat2[i].begin(), sat2[i].end());
  }
  return false;
}

}  // namespace

bool lex_better(const Vocabulary& vocab, const DefaultBase& base, const Stratification& strat,
                World w1, World w2) {
  return lex_key(vocab, base, strat, w1) > lex_key(vocab, base, strat, w2);
}

bool subtheory_better(const Vocabulary& vocab, const DefaultBase& base,
                      const Stratification& strat, World w1, World w2) {
  return profile_better(satisfied_by_layer(vocab, base, strat, w1),
                        satisfied_by_layer(vocab, base, strat, w2));
}

bool entails_penalty(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                     const Formula& beta) {
  const Stratification strat = checked_stratify(vocab, base);
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) return true;
  const WorldSet b = models(beta, vocab);
  std::optional<long> best_ab, best_anb;
  a.for_each([&](World w) {
    const long c = penalty_cost(vocab, base, strat, w);
    auto& slot = b.contains(w) ? best_ab : best_anb;
    if (!slot || c < *slot) slot = c;
  });
  if (!best_ab) return false;
  return !best_anb || *best_ab < *best_anb;
}

bool entails_lex(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                 const Formula& beta) {
  const Stratification strat = checked_stratify(vocab, base);
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) return true;
  const WorldSet b = models(beta, vocab);

  // The order is total, so every maximal model of alpha satisfies beta
  // iff the best supporting key strictly beats the best opposing key.
  std::optional<std::vector<std::size_t>> best_ab, best_anb;
  a.for_each([&](World w) {
    auto key = lex_key(vocab, base, strat, w);
    auto& slot = b.contains(w) ? best_ab : best_anb;
    if (!slot || key > *slot) slot = std::move(key);
  });
  if (!best_ab) return false;
  return !best_anb || *best_ab > *best_anb;
}

bool entails_brewka(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                    const Formula& beta) {
  const Stratification strat = checked_stratify(vocab, base);
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) return true;
  const WorldSet b = models(beta, vocab);

  // The order depends only on the satisfaction profile, so group the
  // models by profile and compare groups; a non-dominated group must
  // consist of beta worlds only.
  std::map<std::vector<std::vector<int>>, bool> groups;  // profile -> all satisfy beta
  a.for_each([&](World w) {
    auto [it, inserted] = groups.emplace(satisfied_by_layer(vocab, base, strat, w), true);
    it->second = it->second && b.contains(w);
  });
  for (const auto& [profile, all_beta] : groups) {
    if (all_beta) continue;
    const bool dominated = std::any_of(groups.begin(), groups.end(), [&](const auto& other) {
      return profile_better(other.first, profile);
    });
    if (!dominated) return false;  // an undominated counter-model
  }
  // A finite strict partial order always has maximal groups, and every
  // one of them passed the beta check.
  return true;
}

}  // namespace beldef
