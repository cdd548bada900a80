#include "beldef/formula.hpp"

#include <cassert>

#include "beldef/vocabulary.hpp"

namespace beldef {

Formula Formula::make(Kind kind, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(l);
  node->rhs = std::move(r);
  return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = value ? Kind::True : Kind::False;
  return Formula(std::move(node));
}

Formula Formula::atom(int index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->atom = index;
  return Formula(std::move(node));
}

Formula Formula::negate(Formula f) { return make(Kind::Not, std::move(f.node_), nullptr); }
Formula Formula::conj(Formula l, Formula r) {
  return make(Kind::And, std::move(l.node_), std::move(r.node_));
}
Formula Formula::disj(Formula l, Formula r) {
  return make(Kind::Or, std::move(l.node_), std::move(r.node_));
}
Formula Formula::implies(Formula l, Formula r) {
  return make(Kind::Implies, std::move(l.node_), std::move(r.node_));
}
Formula Formula::iff(Formula l, Formula r) {
  return make(Kind::Iff, std::move(l.node_), std::move(r.node_));
}

Formula Formula::child() const {
  assert(node_->kind == Kind::Not);
  return Formula(node_->lhs);
}

Formula Formula::left() const { return Formula(node_->lhs); }
Formula Formula::right() const { return Formula(node_->rhs); }

bool Formula::evaluate(World w) const {
  switch (node_->kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return w.atom(node_->atom);
    case Kind::Not: return !Formula(node_->lhs).evaluate(w);
    case Kind::And: return Formula(node_->lhs).evaluate(w) && Formula(node_->rhs).evaluate(w);
    case Kind::Or: return Formula(node_->lhs).evaluate(w) || Formula(node_->rhs).evaluate(w);
    case Kind::Implies: return !Formula(node_->lhs).evaluate(w) || Formula(node_->rhs).evaluate(w);
    case Kind::Iff: return Formula(node_->lhs).evaluate(w) == Formula(node_->rhs).evaluate(w);
  }
  return false;
}

namespace {

// Higher binds tighter; mirrors the grammar for minimal parentheses.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    default: return 5;
  }
}

void print(const Formula& f, const Vocabulary& vocab, int parent_prec, bool right_side,
           std::string& out) {
  const auto kind = f.kind();
  const int prec = precedence(kind);
  switch (kind) {
    case Formula::Kind::True: out += "true"; return;
    case Formula::Kind::False: out += "false"; return;
    case Formula::Kind::Atom: out += vocab.name(f.atom_index()); return;
    case Formula::Kind::Not:
      out += '!';
      print(f.child(), vocab, prec, false, out);
      return;
    default: break;
  }

  // "->" associates right, the other binaries left.
  const bool associates_right = kind == Formula::Kind::Implies;
  bool parens = prec < parent_prec;
  if (prec == parent_prec) parens = associates_right ? !right_side : right_side;
  const char* op = kind == Formula::Kind::And  ? " & "
                 : kind == Formula::Kind::Or   ? " | "
                 : kind == Formula::Kind::Iff  ? " <-> "
                                               : " -> ";
  if (parens) out += '(';
  print(f.left(), vocab, prec, false, out);
  out += op;
  print(f.right(), vocab, prec, true, out);
  if (parens) out += ')';
}

}  // namespace

std::string Formula::to_string(const Vocabulary& vocab) const {
  std::string out;
  print(*this, vocab, 0, false, out);
  return out;
}

WorldSet models(const Formula& f, const Vocabulary& vocab) {
  const std::size_t n = vocab.size();
  switch (f.kind()) {
    case Formula::Kind::True: return WorldSet::all(n);
    case Formula::Kind::False: return WorldSet::none(n);
    case Formula::Kind::Atom: return WorldSet::atom_true(n, f.atom_index());
    case Formula::Kind::Not: return models(f.child(), vocab).complement();
    case Formula::Kind::And: return models(f.left(), vocab) & models(f.right(), vocab);
    case Formula::Kind::Or: return models(f.left(), vocab) | models(f.right(), vocab);
    case Formula::Kind::Implies:
      return models(f.left(), vocab).complement() | models(f.right(), vocab);
    case Formula::Kind::Iff: {
      const WorldSet l = models(f.left(), vocab);
      const WorldSet r = models(f.right(), vocab);
      return (l & r) | (l.complement() & r.complement());
    }
  }
  return WorldSet::none(n);
}

}  // namespace beldef
