#pragma once

#include <map>

#include "beldef/lcd.hpp"
#include "beldef/mass.hpp"
#include "beldef/zsystem.hpp"

namespace beldef {

/// Simple support for one rule: mass 1-e on the models of its material
/// counterpart, e on the universe.
MassAssignment rule_support(const Vocabulary& vocab, const DefaultRule& rule, const Rational& e);

/// Dempster combination of all per-rule supports, rule order. The map
/// gives each rule id its epsilon weight.
MassAssignment combined_mass(const Vocabulary& vocab, const DefaultBase& base,
                             const std::map<int, Rational>& eps_by_rule);

/// Integer exponents respecting a degree system's cone: a rational
/// interior point scaled to integers. Deterministic midpoints without
/// an rng, randomized interior point with one.
std::map<int, long> class_exponents(const DegreeSystem& system, std::mt19937_64* rng = nullptr);

/// eps_d = base_eps ^ exponent_d.
std::map<int, Rational> eps_from_exponents(const Rational& base_eps,
                                           const std::map<int, long>& exponents);

/// Concrete mass assignment for a consonant chain: level i of a k-level
/// chain gets mass level_eps[i-1] - level_eps[i], the innermost set
/// 1 - level_eps[0], the universe level_eps[k-1]. Requires a strictly
/// decreasing eps vector in (0,1), one entry per chain element.
MassAssignment consonant_mass(const Vocabulary& vocab, const ConsonantEbf& ebf,
                              const std::vector<Rational>& level_eps);

/// Numeric violation-term value at a world: the product of the violated
/// rules' epsilon weights.
Rational viol_product(const Vocabulary& vocab, const DefaultBase& base,
                      const std::map<int, Rational>& eps_by_rule, World w);

}  // namespace beldef
