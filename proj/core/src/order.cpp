#include "beldef/order.hpp"

#include <algorithm>
#include <set>

#include "beldef/errors.hpp"

namespace beldef {

const char* to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Greater: return "greater";
    case OrderVerdict::Smaller: return "smaller";
    case OrderVerdict::SameOrder: return "same-order";
    case OrderVerdict::Incomparable: return "incomparable";
  }
  return "?";
}

OrderVerdict flipped(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Greater: return OrderVerdict::Smaller;
    case OrderVerdict::Smaller: return OrderVerdict::Greater;
    default: return v;
  }
}

void DegreeSystem::add_symbol(int id) {
  if (std::find(symbols_.begin(), symbols_.end(), id) == symbols_.end()) symbols_.push_back(id);
}

void DegreeSystem::add_symbols(std::span<const int> ids) {
  for (int id : ids) add_symbol(id);
}

void DegreeSystem::push_class(std::vector<EpsTerm> terms) {
  for (const auto& t : terms) {
    for (const auto& [id, _] : t.powers()) add_symbol(id);
  }
  classes_.push_back(std::move(terms));
}

void DegreeSystem::append_to_last_class(const EpsTerm& term) {
  for (const auto& [id, _] : term.powers()) add_symbol(id);
  if (classes_.empty()) {
    classes_.push_back({term});
  } else {
    classes_.back().push_back(term);
  }
}

void DegreeSystem::require_same_order(EpsTerm a, EpsTerm b) {
  for (const auto& t : {a, b}) {
    for (const auto& [id, _] : t.powers()) add_symbol(id);
  }
  equalities_.emplace_back(std::move(a), std::move(b));
}

void DegreeSystem::require_larger_order(EpsTerm larger, EpsTerm smaller) {
  for (const auto& t : {larger, smaller}) {
    for (const auto& [id, _] : t.powers()) add_symbol(id);
  }
  stricts_.emplace_back(std::move(larger), std::move(smaller));
}

lin::LinearForm DegreeSystem::degree(const EpsTerm& term) {
  lin::LinearForm form;
  for (const auto& [id, k] : term.powers()) form.add(id, Rational(k));
  return form;
}

std::vector<lin::Constraint> DegreeSystem::base_constraints() const {
  std::vector<lin::Constraint> cons;
  for (int id : symbols_) {
    cons.push_back(lin::gt(degree(EpsTerm::symbol(id)), lin::LinearForm{}));
  }
  for (const auto& cls : classes_) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      cons.push_back(lin::eq(degree(cls[0]), degree(cls[i])));
    }
  }
  for (std::size_t k = 0; k + 1 < classes_.size(); ++k) {
    // Class k has strictly larger order, i.e. strictly smaller degree.
    cons.push_back(lin::gt(degree(classes_[k + 1][0]), degree(classes_[k][0])));
  }
  for (const auto& [a, b] : equalities_) {
    cons.push_back(lin::eq(degree(a), degree(b)));
  }
  for (const auto& [larger, smaller] : stricts_) {
    cons.push_back(lin::gt(degree(smaller), degree(larger)));
  }
  return cons;
}

bool DegreeSystem::feasible() const { return lin::feasible(base_constraints()); }

void DegreeSystem::check_feasible() const {
  if (!feasible()) throw InfeasibleSystemError("degree system has an empty cone");
}

OrderVerdict DegreeSystem::compare(const EpsTerm& t1, const EpsTerm& t2) const {
  check_feasible();
  const lin::LinearForm d1 = degree(t1);
  const lin::LinearForm d2 = degree(t2);

  auto exists = [&](lin::Constraint extra) {
    auto cons = base_constraints();
    cons.push_back(std::move(extra));
    return lin::feasible(cons);
  };

  const bool can_gt = exists(lin::gt(d2, d1));  // deg t1 < deg t2 somewhere
  const bool can_lt = exists(lin::gt(d1, d2));
  const bool can_eq = exists(lin::eq(d1, d2));

  if (!can_lt && !can_eq) return OrderVerdict::Greater;
  if (!can_gt && !can_eq) return OrderVerdict::Smaller;
  if (!can_gt && !can_lt) return OrderVerdict::SameOrder;
  return OrderVerdict::Incomparable;
}

OrderVerdict DegreeSystem::compare_max(std::span<const EpsTerm> s1,
                                       std::span<const EpsTerm> s2) const {
  if (s1.empty() || s2.empty()) throw Error("compare_max over an empty term set");
  check_feasible();

  const auto base = base_constraints();

  // max(S) over infinitesimals is the member of pointwise minimal
  // degree; all three existence queries reduce to witness choices.
  auto exists_strict = [&](std::span<const EpsTerm> winners, std::span<const EpsTerm> losers) {
    // Some point where one winner has strictly smaller degree than
    // every loser, i.e. max(winners) is strictly larger there.
    for (const auto& w : winners) {
      auto cons = base;
      const lin::LinearForm dw = degree(w);
      for (const auto& l : losers) {
        cons.push_back(lin::gt(degree(l), dw));
      }
      if (lin::feasible(cons)) return true;
    }
    return false;
  };

  auto exists_equal = [&]() {
    for (const auto& t : s1) {
      const lin::LinearForm dt = degree(t);
      for (const auto& s : s2) {
        auto cons = base;
        cons.push_back(lin::eq(dt, degree(s)));
        for (const auto& u : s1) cons.push_back(lin::ge(degree(u), dt));
        for (const auto& u : s2) cons.push_back(lin::ge(degree(u), dt));
        if (lin::feasible(cons)) return true;
      }
    }
    return false;
  };

  const bool can_gt = exists_strict(s1, s2);
  const bool can_lt = exists_strict(s2, s1);
  const bool can_eq = exists_equal();

  if (!can_lt && !can_eq) return OrderVerdict::Greater;
  if (!can_gt && !can_eq) return OrderVerdict::Smaller;
  if (!can_gt && !can_lt) return OrderVerdict::SameOrder;
  return OrderVerdict::Incomparable;
}

std::optional<std::map<int, Rational>> DegreeSystem::sample_degrees(std::mt19937_64* rng) const {
  auto point = lin::sample_point(base_constraints(), rng);
  if (!point) return std::nullopt;
  for (int id : symbols_) {
    if (!point->contains(id)) (*point)[id] = 1;
  }
  return point;
}

}  // namespace beldef
