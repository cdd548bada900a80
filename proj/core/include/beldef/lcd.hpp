#pragma once

#include <string>
#include <vector>

#include "beldef/order.hpp"
#include "beldef/stratify.hpp"
#include "beldef/worlds.hpp"

namespace beldef {

/// Product of the epsilon symbols of exactly the rules whose material
/// counterpart w falsifies; the unit term when w violates nothing. Up to
/// the same order, this is the combined plausibility of {w}.
EpsTerm viol_term(const Vocabulary& vocab, const DefaultBase& base, World w);

/// Auto-deduction constraint of one rule: max over its
/// antecedent-and-consequent worlds of the violation terms must be
/// infinitely larger than the max over antecedent-and-not-consequent
/// worlds. Both sides are pruned: a term that is a multiset superset of
/// another on the same side can never be the max and is dropped.
struct LcdConstraint {
  int rule_id = 0;
  std::vector<EpsTerm> lhs;
  std::vector<EpsTerm> rhs;
};

/// One constraint per rule occurrence, in rule order. Rules whose
/// antecedent-and-not-consequent is unsatisfiable are vacuous and
/// generate none; a rule whose antecedent-and-consequent is
/// unsatisfiable (or whose sides both reach the unit term) cannot be
/// represented and raises SolveError.
std::vector<LcdConstraint> gen_constraints(const Vocabulary& vocab, const DefaultBase& base);

struct SolveRound {
  int round = 0;
  std::vector<int> discharged;       // rule ids
  std::vector<EpsTerm> class_terms;  // empty when no new class appeared
};

/// Solved class partition of the epsilon symbols, with provenance. The
/// system is verified: every generated constraint compares Greater over
/// the final cone. Immutable once built; queries are pure and safe to
/// run concurrently.
struct LcdModel {
  DefaultBase base;
  DegreeSystem system;
  std::vector<LcdConstraint> constraints;
  std::vector<SolveRound> rounds;
  std::vector<int> attached_symbols;  // symbols joined to the final class
  std::vector<std::string> warnings;  // e.g. skipped symmetric splits
};

/// Round-based peeling over the constraints, followed by the symmetric
/// split, attachment of unconstrained symbols, and a full verification
/// pass. Throws SolveError when no progress can be made or verification
/// fails.
LcdModel solve(const Vocabulary& vocab, const DefaultBase& base);
LcdModel solve_constraints(DefaultBase base, std::vector<LcdConstraint> constraints);

struct LcdAnswer {
  bool entailed = false;
  /// Vacuous: alpha unsatisfiable. Classical: no counter-worlds.
  enum class Route { Vacuous, Classical, NoSupport, Compared } route = Route::Compared;
  OrderVerdict verdict = OrderVerdict::Incomparable;  // meaningful when Compared
  std::vector<EpsTerm> support;  // pruned terms of alpha-and-beta worlds
  std::vector<EpsTerm> against;  // pruned terms of alpha-and-not-beta worlds
};

/// Entailment over every admissible parameter assignment: true iff the
/// supporting side is infinitely larger on the whole cone. Same-order
/// (ambiguity) and incomparability both block entailment; the answer
/// records which.
LcdAnswer query_lcd(const Vocabulary& vocab, const LcdModel& model, const Formula& alpha,
                    const Formula& beta);
bool entails_lcd(const Vocabulary& vocab, const LcdModel& model, const Formula& alpha,
                 const Formula& beta);

/// Models of alpha not strictly dominated in the plausibility order.
/// Throws on unsatisfiable alpha.
std::vector<World> preferred_models(const Vocabulary& vocab, const LcdModel& model,
                                    const Formula& alpha);

/// Removes duplicates and multiset-supersets; the surviving terms carry
/// the pointwise max.
std::vector<EpsTerm> prune_terms(std::vector<EpsTerm> terms);

}  // namespace beldef
