#include "beldef/stratify.hpp"

#include <algorithm>

namespace beldef {

int Stratification::layer_of(int rule_id) const {
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (std::find(strata[i].begin(), strata[i].end(), rule_id) != strata[i].end()) {
      return static_cast<int>(i) + 1;
    }
  }
  return 0;
}

bool tolerated(const Vocabulary& vocab, const DefaultRule& rule,
               std::span<const DefaultRule> context) {
  WorldSet candidates = models(rule.antecedent, vocab) & models(rule.consequent, vocab);
  for (const auto& other : context) {
    if (candidates.empty()) return false;
    candidates = candidates & models(material(other), vocab);
  }
  return !candidates.empty();
}

bool tolerated(const Vocabulary& vocab, const DefaultRule& rule, const DefaultBase& base) {
  return tolerated(vocab, rule, std::span<const DefaultRule>(base.rules()));
}

Stratification stratify(const Vocabulary& vocab, const DefaultBase& base) {
  Stratification out;
  std::vector<DefaultRule> remaining = base.rules();
  while (!remaining.empty()) {
    std::vector<int> layer;
    std::vector<DefaultRule> rest;
    for (const auto& rule : remaining) {
      if (tolerated(vocab, rule, std::span<const DefaultRule>(remaining))) {
        layer.push_back(rule.id);
      } else {
        rest.push_back(rule);
      }
    }
    if (layer.empty()) {
      for (const auto& rule : remaining) out.residue.push_back(rule.id);
      return out;
    }
    out.strata.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return out;
}

int world_rank(const Vocabulary&, const DefaultBase& base, const Stratification& strat,
               World w) {
  int rank = 0;
  for (const auto& rule : base.rules()) {
    if (!material(rule).evaluate(w)) {
      rank = std::max(rank, strat.layer_of(rule.id));
    }
  }
  return rank;
}

std::optional<int> formula_rank(const Vocabulary& vocab, const DefaultBase& base,
                                const Stratification& strat, const Formula& f) {
  std::optional<int> best;
  models(f, vocab).for_each([&](World w) {
    const int r = world_rank(vocab, base, strat, w);
    if (!best || r < *best) best = r;
  });
  return best;
}

}  // namespace beldef
