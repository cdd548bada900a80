#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "beldef/formula.hpp"
#include "beldef/vocabulary.hpp"

namespace beldef {

/// "Generally, if antecedent then consequent". The arrow is a data
/// constructor, not a connective; its classical projection is
/// material(). Ids are 1..n in base order and survive compilation —
/// the per-rule epsilon symbols key on them.
struct DefaultRule {
  int id = 0;
  Formula antecedent;
  Formula consequent;
};

/// !antecedent | consequent.
Formula material(const DefaultRule& rule);

/// Ordered multiset of default rules. Duplicate (antecedent, consequent)
/// pairs are distinct rules with distinct ids.
class DefaultBase {
 public:
  int add(Formula antecedent, Formula consequent);

  const std::vector<DefaultRule>& rules() const { return rules_; }
  const DefaultRule& rule(int id) const;  // 1-based id
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<DefaultRule> rules_;
};

/// A parsed knowledge base: the vocabulary travels with the rules so
/// that query formulas can extend it before engines are compiled.
struct KnowledgeBase {
  Vocabulary vocab;
  DefaultBase base;
};

// KB text format, line oriented:
//   "#" starts a comment, blank lines are ignored,
//   an optional leading header "atoms: a b c" pins atom order,
//   every other line is "<formula> ~> <formula>"; ids follow line order.
KnowledgeBase parse_kb(const std::string& text, std::size_t capacity = Vocabulary::kDefaultCapacity);
KnowledgeBase load_kb(const std::string& path, std::size_t capacity = Vocabulary::kDefaultCapacity);

std::string rule_to_string(const Vocabulary& vocab, const DefaultRule& rule);

}  // namespace beldef
