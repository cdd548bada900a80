#include "beldef/zsystem.hpp"

#include <algorithm>
#include <set>

#include "beldef/errors.hpp"

namespace beldef {

int ConsonantEbf::level(World w) const {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].contains(w)) return static_cast<int>(i);
  }
  return static_cast<int>(chain.size());
}

namespace {

// Least level over the models of f at the current partial chain; nullopt
// for an empty model set.
std::optional<int> best_level(const ConsonantEbf& partial, const WorldSet& worlds) {
  std::optional<int> best;
  worlds.for_each([&](World w) {
    const int lv = partial.level(w);
    if (!best || lv < *best) best = lv;
  });
  return best;
}

// bel([beta]|alpha) tends to 1 on the chain iff the best alpha-and-beta
// world sits on a strictly higher plausibility level than the best
// alpha-and-not-beta world. A counter-world of a pending rule violates
// its material counterpart and therefore sits outside the whole chain,
// so the comparison reduces to the support side reaching inside; using
// that form directly also keeps never-violated rules waiting until
// their antecedent fits the chain, which is what aligns the layers with
// the tolerance strata.
bool chain_satisfies(const ConsonantEbf& partial, const WorldSet& ab) {
  const auto lab = best_level(partial, ab);
  return lab && *lab < static_cast<int>(partial.chain.size());
}

}  // namespace

ConsonantEbf lc_build(const Vocabulary& vocab, const DefaultBase& base) {
  ConsonantEbf out;
  std::vector<DefaultRule> remaining = base.rules();
  while (!remaining.empty()) {
    WorldSet supported = WorldSet::all(vocab.size());
    for (const auto& rule : remaining) supported = supported & models(material(rule), vocab);
    if (!out.chain.empty() && supported == out.chain.back()) {
      // A repeated chain element cannot newly satisfy anything.
      std::string residue;
      for (const auto& rule : remaining) residue += (residue.empty() ? "" : ", ") + std::to_string(rule.id);
      throw InconsistentBaseError("no least-committed structure; stuck on rules " + residue);
    }
    out.chain.push_back(supported);

    std::vector<int> layer;
    std::vector<DefaultRule> rest;
    for (const auto& rule : remaining) {
      const WorldSet ab = models(rule.antecedent, vocab) & models(rule.consequent, vocab);
      if (chain_satisfies(out, ab)) {
        layer.push_back(rule.id);
      } else {
        rest.push_back(rule);
      }
    }
    if (layer.empty()) {
      std::string residue;
      for (const auto& rule : remaining) residue += (residue.empty() ? "" : ", ") + std::to_string(rule.id);
      throw InconsistentBaseError("no least-committed structure; unsatisfied rules " + residue);
    }
    out.layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return out;
}

bool entails_z(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
               const Formula& beta) {
  const Stratification strat = stratify(vocab, base);
  if (!strat.consistent()) throw InconsistentBaseError("base has no stratification");
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) return true;
  const WorldSet b = models(beta, vocab);
  std::optional<int> best_ab, best_anb;
  a.for_each([&](World w) {
    const int r = world_rank(vocab, base, strat, w);
    auto& slot = b.contains(w) ? best_ab : best_anb;
    if (!slot || r < *slot) slot = r;
  });
  if (!best_ab) return false;
  return !best_anb || *best_ab < *best_anb;
}

bool entails_lc(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
                const Formula& beta) {
  const ConsonantEbf ebf = lc_build(vocab, base);
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) return true;
  const WorldSet b = models(beta, vocab);

  // Chain parameters e1 > e2 > ... as a totally ordered degree system.
  DegreeSystem sys;
  const int depth = static_cast<int>(ebf.chain.size());
  for (int i = 1; i <= depth; ++i) sys.push_class({EpsTerm::symbol(i)});

  auto term_of = [&](World w) {
    const int lv = std::min(ebf.level(w), depth);
    return lv == 0 ? EpsTerm::unit() : EpsTerm::symbol(lv);
  };

  std::set<EpsTerm> support, against;
  a.for_each([&](World w) { (b.contains(w) ? support : against).insert(term_of(w)); });
  if (support.empty()) return false;
  if (against.empty()) return true;
  const std::vector<EpsTerm> s1(support.begin(), support.end());
  const std::vector<EpsTerm> s2(against.begin(), against.end());
  return sys.compare_max(s1, s2) == OrderVerdict::Greater;
}

bool entails_p(const Vocabulary& vocab, const DefaultBase& base, const Formula& alpha,
               const Formula& beta) {
  if (!stratify(vocab, base).consistent()) {
    throw InconsistentBaseError("base has no stratification");
  }
  if (models(alpha, vocab).empty()) return true;
  DefaultBase extended = base;
  extended.add(alpha, Formula::negate(beta));
  return !stratify(vocab, extended).consistent();
}

}  // namespace beldef
