#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "beldef/epsilon.hpp"
#include "beldef/linear.hpp"

namespace beldef {

/// Outcome of an order-of-magnitude comparison between infinitesimal
/// terms. Greater(a,b) means a is infinitely larger than b under every
/// admissible degree assignment.
enum class OrderVerdict { Greater, Smaller, SameOrder, Incomparable };

const char* to_string(OrderVerdict v);
OrderVerdict flipped(OrderVerdict v);

/// Linear model of infinitesimal orders. Every symbol e carries a
/// strictly positive degree variable x_e (think e = t^{x_e} for one base
/// infinitesimal t); a term's degree is the weighted sum over its
/// symbols. Same order means equal degree, infinitely larger means
/// strictly smaller degree. Constraints come in three shapes:
///   - classes: an ordered chain; terms inside one class share a degree
///     and consecutive classes are separated by a strict inequality only
///     (ratios between them stay free otherwise),
///   - extra same-order equalities between terms,
///   - extra strictly-larger-order facts between terms.
/// Comparisons quantify universally over the feasible cone.
/// Immutable once populated; comparisons are pure.
class DegreeSystem {
 public:
  void add_symbol(int id);
  void add_symbols(std::span<const int> ids);

  /// Appends the next class of the chain (lower order than all before).
  void push_class(std::vector<EpsTerm> terms);
  /// Adds a singleton term to the last class (same degree), creating a
  /// first class when none exists.
  void append_to_last_class(const EpsTerm& term);

  void require_same_order(EpsTerm a, EpsTerm b);
  void require_larger_order(EpsTerm larger, EpsTerm smaller);

  const std::vector<std::vector<EpsTerm>>& classes() const { return classes_; }
  const std::vector<int>& symbols() const { return symbols_; }

  bool feasible() const;

  /// Throws InfeasibleSystemError when the cone is empty.
  OrderVerdict compare(const EpsTerm& t1, const EpsTerm& t2) const;

  /// Order comparison of max(S1) vs max(S2), where the max of a set of
  /// infinitesimal terms is its pointwise minimal degree. Both sets must
  /// be nonempty.
  OrderVerdict compare_max(std::span<const EpsTerm> s1, std::span<const EpsTerm> s2) const;

  /// A strictly positive rational degree assignment inside the cone, if
  /// any. Deterministic without rng, randomized interior point with one.
  std::optional<std::map<int, Rational>> sample_degrees(std::mt19937_64* rng = nullptr) const;

  /// Degree of a term as a linear form over symbol variables.
  static lin::LinearForm degree(const EpsTerm& term);

 private:
  std::vector<lin::Constraint> base_constraints() const;
  void check_feasible() const;

  std::vector<int> symbols_;
  std::vector<std::vector<EpsTerm>> classes_;
  std::vector<std::pair<EpsTerm, EpsTerm>> equalities_;
  std::vector<std::pair<EpsTerm, EpsTerm>> stricts_;  // first has larger order
};

}  // namespace beldef
