#pragma once

#include <memory>
#include <string>

#include "beldef/worlds.hpp"

namespace beldef {

class Vocabulary;

/// Immutable propositional formula over a vocabulary's atoms. Nodes are
/// shared; copying is cheap. Atom references stay valid when the
/// vocabulary later grows (indices are stable).
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff };

  Formula() : Formula(constant(true)) {}

  static Formula constant(bool value);
  static Formula atom(int index);
  static Formula negate(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);

  Kind kind() const { return node_->kind; }
  int atom_index() const { return node_->atom; }
  Formula child() const;  // operand of Not
  Formula left() const;
  Formula right() const;

  bool evaluate(World w) const;

  /// Canonical printer; parse(print(f)) reproduces the same tree.
  std::string to_string(const Vocabulary& vocab) const;

 private:
  struct Node {
    Kind kind;
    int atom = -1;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r);

  std::shared_ptr<const Node> node_;
};

/// All worlds satisfying f, computed structurally over bitset masks.
WorldSet models(const Formula& f, const Vocabulary& vocab);

}  // namespace beldef
