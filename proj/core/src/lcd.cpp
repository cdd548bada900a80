#include "beldef/lcd.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "beldef/errors.hpp"

namespace beldef {

EpsTerm viol_term(const Vocabulary&, const DefaultBase& base, World w) {
  EpsTerm t;
  for (const auto& rule : base.rules()) {
    if (!material(rule).evaluate(w)) t = t.times_symbol(rule.id);
  }
  return t;
}

std::vector<EpsTerm> prune_terms(std::vector<EpsTerm> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<EpsTerm> kept;
  for (const auto& t : terms) {
    const bool dominated = std::any_of(terms.begin(), terms.end(), [&](const EpsTerm& s) {
      return s != t && s.subset_of(t);
    });
    if (!dominated) kept.push_back(t);
  }
  return kept;
}

namespace {

std::vector<EpsTerm> side_terms(const Vocabulary& vocab, const DefaultBase& base,
                                const WorldSet& worlds) {
  std::vector<EpsTerm> terms;
  worlds.for_each([&](World w) { terms.push_back(viol_term(vocab, base, w)); });
  return prune_terms(std::move(terms));
}

}  // namespace

std::vector<LcdConstraint> gen_constraints(const Vocabulary& vocab, const DefaultBase& base) {
  std::vector<LcdConstraint> out;
  for (const auto& rule : base.rules()) {
    const WorldSet a = models(rule.antecedent, vocab);
    const WorldSet b = models(rule.consequent, vocab);
    const WorldSet ab = a & b;
    const WorldSet anb = a - b;
    if (ab.empty()) {
      throw SolveError("rule " + std::to_string(rule.id) +
                       " cannot be satisfied: antecedent-and-consequent has no model");
    }
    if (anb.empty()) continue;  // never violated, vacuously deduced
    LcdConstraint c;
    c.rule_id = rule.id;
    c.lhs = side_terms(vocab, base, ab);
    c.rhs = side_terms(vocab, base, anb);
    const bool unit_lhs = std::any_of(c.lhs.begin(), c.lhs.end(),
                                      [](const EpsTerm& t) { return t.is_unit(); });
    const bool unit_rhs = std::any_of(c.rhs.begin(), c.rhs.end(),
                                      [](const EpsTerm& t) { return t.is_unit(); });
    if (unit_lhs && unit_rhs) {
      throw SolveError("rule " + std::to_string(rule.id) +
                       " cannot be represented: violation-free worlds on both sides");
    }
    out.push_back(std::move(c));
  }
  return out;
}

LcdModel solve(const Vocabulary& vocab, const DefaultBase& base) {
  return solve_constraints(base, gen_constraints(vocab, base));
}

namespace {

bool placed(const DegreeSystem& sys, const EpsTerm& term) {
  for (const auto& cls : sys.classes()) {
    if (std::find(cls.begin(), cls.end(), term) != cls.end()) return true;
  }
  return false;
}

std::set<int> placed_symbols(const DegreeSystem& sys) {
  std::set<int> out;
  for (const auto& cls : sys.classes()) {
    for (const auto& t : cls) {
      for (const auto& [id, _] : t.powers()) out.insert(id);
    }
  }
  return out;
}

}  // namespace

LcdModel solve_constraints(DefaultBase base, std::vector<LcdConstraint> constraints) {
  LcdModel model;
  model.base = std::move(base);
  model.constraints = std::move(constraints);

  std::vector<int> symbols;
  for (const auto& rule : model.base.rules()) symbols.push_back(rule.id);
  model.system.add_symbols(symbols);

  std::vector<std::size_t> active(model.constraints.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  int round = 0;
  while (!active.empty()) {
    // Hypothesis for this round: symbols not yet covered by any class
    // term will land strictly below every class formed so far.
    DegreeSystem trial = model.system;
    if (!trial.classes().empty()) {
      const EpsTerm rep = trial.classes().back().front();
      const std::set<int> covered = placed_symbols(trial);
      for (int id : symbols) {
        if (!covered.contains(id)) trial.require_larger_order(rep, EpsTerm::symbol(id));
      }
    }

    std::vector<std::size_t> discharged, still_active;
    for (std::size_t idx : active) {
      const LcdConstraint& c = model.constraints[idx];
      bool ok = false;
      for (const auto& t : c.lhs) {
        if (!t.is_unit() && !placed(model.system, t)) continue;
        if (trial.compare_max(std::span(&t, 1), c.rhs) == OrderVerdict::Greater) {
          ok = true;
          break;
        }
      }
      (ok ? discharged : still_active).push_back(idx);
    }
    if (discharged.empty()) {
      std::string ids;
      for (std::size_t idx : active) {
        ids += (ids.empty() ? "" : ", ") + std::to_string(model.constraints[idx].rule_id);
      }
      throw SolveError("no class partition: stuck on constraints of rules " + ids);
    }

    std::set<EpsTerm> collected;
    for (std::size_t idx : discharged) {
      for (const auto& t : model.constraints[idx].rhs) {
        if (!placed(model.system, t)) collected.insert(t);
      }
    }
    // Across constraints the collected candidates may repeat superset
    // pairs; a superset is strictly smaller and cannot share the class.
    std::vector<EpsTerm> class_terms =
        prune_terms(std::vector<EpsTerm>(collected.begin(), collected.end()));

    SolveRound log;
    log.round = round++;
    for (std::size_t idx : discharged) log.discharged.push_back(model.constraints[idx].rule_id);
    log.class_terms = class_terms;
    model.rounds.push_back(std::move(log));

    if (!class_terms.empty()) {
      model.system.push_class(std::move(class_terms));
      if (!model.system.feasible()) {
        throw SolveError("no class partition: round " + std::to_string(round - 1) +
                         " produced an empty cone");
      }
    }
    active = std::move(still_active);
  }

  // Symbols untouched by any class term join the final class.
  const std::set<int> covered = placed_symbols(model.system);
  for (int id : symbols) {
    if (!covered.contains(id)) {
      model.system.append_to_last_class(EpsTerm::symbol(id));
      model.attached_symbols.push_back(id);
    }
  }

  // Symmetric split: members of a complex class term whose symbols occur
  // in no other class term share their degrees; anything more entangled
  // is left free (weaker cone) with a warning.
  std::map<int, int> occurrences;
  std::vector<EpsTerm> all_class_terms;
  for (const auto& cls : model.system.classes()) {
    for (const auto& t : cls) {
      all_class_terms.push_back(t);
      for (const auto& [id, _] : t.powers()) occurrences[id] += 1;
    }
  }
  for (const auto& t : all_class_terms) {
    std::size_t breadth = 0;
    for (const auto& [_, k] : t.powers()) breadth += static_cast<std::size_t>(k);
    if (breadth < 2) continue;
    const bool isolated = std::all_of(t.powers().begin(), t.powers().end(),
                                      [&](const auto& p) { return occurrences[p.first] == 1; });
    if (!isolated) {
      model.warnings.push_back("no symmetric split for class term " + t.str() +
                               ": a member symbol occurs in another class term");
      continue;
    }
    const int first = t.powers().begin()->first;
    for (const auto& [id, _] : t.powers()) {
      if (id != first) {
        model.system.require_same_order(EpsTerm::symbol(first), EpsTerm::symbol(id));
      }
    }
  }

  if (!model.system.feasible()) {
    throw SolveError("class partition verification failed: empty cone");
  }
  for (const auto& c : model.constraints) {
    if (model.system.compare_max(c.lhs, c.rhs) != OrderVerdict::Greater) {
      throw SolveError("class partition verification failed for rule " +
                       std::to_string(c.rule_id));
    }
  }
  return model;
}

LcdAnswer query_lcd(const Vocabulary& vocab, const LcdModel& model, const Formula& alpha,
                    const Formula& beta) {
  LcdAnswer answer;
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) {
    answer.entailed = true;
    answer.route = LcdAnswer::Route::Vacuous;
    return answer;
  }
  const WorldSet b = models(beta, vocab);
  answer.support = side_terms(vocab, model.base, a & b);
  answer.against = side_terms(vocab, model.base, a - b);
  if (answer.against.empty()) {
    answer.entailed = true;
    answer.route = LcdAnswer::Route::Classical;
    return answer;
  }
  if (answer.support.empty()) {
    answer.entailed = false;
    answer.route = LcdAnswer::Route::NoSupport;
    return answer;
  }
  answer.route = LcdAnswer::Route::Compared;
  answer.verdict = model.system.compare_max(answer.support, answer.against);
  answer.entailed = answer.verdict == OrderVerdict::Greater;
  return answer;
}

bool entails_lcd(const Vocabulary& vocab, const LcdModel& model, const Formula& alpha,
                 const Formula& beta) {
  return query_lcd(vocab, model, alpha, beta).entailed;
}

std::vector<World> preferred_models(const Vocabulary& vocab, const LcdModel& model,
                                    const Formula& alpha) {
  const WorldSet a = models(alpha, vocab);
  if (a.empty()) throw Error("preferred models of an unsatisfiable formula");
  const std::vector<World> worlds = a.worlds();
  std::vector<EpsTerm> terms;
  terms.reserve(worlds.size());
  for (World w : worlds) terms.push_back(viol_term(vocab, model.base, w));

  std::vector<World> out;
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < worlds.size() && !dominated; ++j) {
      if (j == i || terms[j] == terms[i]) continue;
      dominated = model.system.compare(terms[j], terms[i]) == OrderVerdict::Greater;
    }
    if (!dominated) out.push_back(worlds[i]);
  }
  return out;
}

}  // namespace beldef
