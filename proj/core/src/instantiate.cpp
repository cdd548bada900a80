#include "beldef/instantiate.hpp"

#include <numeric>

#include "beldef/errors.hpp"

namespace beldef {

MassAssignment rule_support(const Vocabulary& vocab, const DefaultRule& rule, const Rational& e) {
  return simple_support(models(material(rule), vocab), e);
}

MassAssignment combined_mass(const Vocabulary& vocab, const DefaultBase& base,
                             const std::map<int, Rational>& eps_by_rule) {
  MassAssignment acc = MassAssignment::vacuous(vocab.size());
  for (const auto& rule : base.rules()) {
    acc = combine(acc, rule_support(vocab, rule, eps_by_rule.at(rule.id)));
  }
  return acc;
}

std::map<int, long> class_exponents(const DegreeSystem& system, std::mt19937_64* rng) {
  auto point = system.sample_degrees(rng);
  if (!point) throw InfeasibleSystemError("degree system has an empty cone");
  // The cone is homogeneous; scale the rational point to integers.
  BigInt lcm = 1;
  for (const auto& [_, value] : *point) {
    lcm = boost::multiprecision::lcm(lcm, denominator(value));
  }
  std::map<int, long> out;
  for (const auto& [id, value] : *point) {
    const BigInt scaled = numerator(value) * (lcm / denominator(value));
    if (scaled <= 0 || scaled > 1000000) {
      throw Error("degenerate cone point: exponent " + scaled.str());
    }
    out[id] = scaled.convert_to<long>();
  }
  return out;
}

std::map<int, Rational> eps_from_exponents(const Rational& base_eps,
                                           const std::map<int, long>& exponents) {
  std::map<int, Rational> out;
  for (const auto& [id, k] : exponents) {
    if (k <= 0) throw Error("nonpositive epsilon exponent");
    out[id] = rational_pow(base_eps, static_cast<unsigned long>(k));
  }
  return out;
}

MassAssignment consonant_mass(const Vocabulary& vocab, const ConsonantEbf& ebf,
                              const std::vector<Rational>& level_eps) {
  if (level_eps.size() != ebf.chain.size()) {
    throw Error("one epsilon per chain element expected");
  }
  MassAssignment::Builder b(vocab.size());
  if (ebf.chain.empty()) {
    b.add(WorldSet::all(vocab.size()), 1);
    return std::move(b).build();
  }
  b.add(ebf.chain.front(), 1 - level_eps.front());
  for (std::size_t i = 1; i < ebf.chain.size(); ++i) {
    b.add(ebf.chain[i], level_eps[i - 1] - level_eps[i]);
  }
  b.add(WorldSet::all(vocab.size()), level_eps.back());
  return std::move(b).build();
}

Rational viol_product(const Vocabulary&, const DefaultBase& base,
                      const std::map<int, Rational>& eps_by_rule, World w) {
  Rational product = 1;
  for (const auto& rule : base.rules()) {
    if (!material(rule).evaluate(w)) product *= eps_by_rule.at(rule.id);
  }
  return product;
}

}  // namespace beldef
