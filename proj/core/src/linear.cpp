#include "beldef/linear.hpp"

#include <algorithm>
#include <set>

namespace beldef::lin {

void LinearForm::add(Var v, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (const auto& [v, c] : other.coeffs) add(v, c);
  constant += other.constant;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (const auto& [v, c] : other.coeffs) add(v, -c);
  constant -= other.constant;
  return *this;
}

LinearForm LinearForm::scaled(const Rational& factor) const {
  LinearForm out;
  if (factor == 0) return out;
  for (const auto& [v, c] : coeffs) out.coeffs.emplace(v, c * factor);
  out.constant = constant * factor;
  return out;
}

Rational LinearForm::evaluate(const std::map<Var, Rational>& point) const {
  Rational value = constant;
  for (const auto& [v, c] : coeffs) value += c * point.at(v);
  return value;
}

Constraint eq(LinearForm lhs, LinearForm rhs) {
  lhs -= rhs;
  return {std::move(lhs), Rel::Eq};
}

Constraint ge(LinearForm lhs, LinearForm rhs) {
  lhs -= rhs;
  return {std::move(lhs), Rel::Ge};
}

Constraint gt(LinearForm lhs, LinearForm rhs) {
  lhs -= rhs;
  return {std::move(lhs), Rel::Gt};
}

namespace {

// Bound on an eliminated variable, in terms of later-eliminated
// variables: v >= expr (lower) or v <= expr (upper), strict or not.
struct Bound {
  LinearForm expr;
  bool strict;
};

struct Elimination {
  Var var;
  std::vector<Bound> lowers;
  std::vector<Bound> uppers;
};

struct Substitution {
  Var var;
  LinearForm expr;
};

bool constant_holds(const Constraint& c) {
  switch (c.rel) {
    case Rel::Eq: return c.form.constant == 0;
    case Rel::Ge: return c.form.constant >= 0;
    case Rel::Gt: return c.form.constant > 0;
  }
  return false;
}

// Core elimination engine. Returns std::nullopt when infeasible;
// otherwise the recorded substitutions and eliminations allow a witness
// to be rebuilt back to front.
struct Solved {
  std::vector<Substitution> substitutions;  // applied in recorded order
  std::vector<Elimination> eliminations;
};

std::optional<Solved> eliminate(std::vector<Constraint> cons) {
  Solved out;

  // Drop or reject constant constraints as they appear.
  auto sweep_constants = [&](std::vector<Constraint>& cs) -> bool {
    std::vector<Constraint> kept;
    kept.reserve(cs.size());
    for (auto& c : cs) {
      if (c.form.is_constant()) {
        if (!constant_holds(c)) return false;
      } else {
        kept.push_back(std::move(c));
      }
    }
    cs = std::move(kept);
    return true;
  };

  if (!sweep_constants(cons)) return std::nullopt;

  // Equalities first: solve one variable and substitute everywhere.
  for (;;) {
    auto it = std::find_if(cons.begin(), cons.end(),
                           [](const Constraint& c) { return c.rel == Rel::Eq; });
    if (it == cons.end()) break;
    const auto& [v, coeff] = *it->form.coeffs.begin();
    // v = -(rest)/coeff
    LinearForm rest = it->form;
    rest.coeffs.erase(v);
    LinearForm expr = rest.scaled(Rational(-1) / coeff);
    const Var var = v;
    cons.erase(it);
    for (auto& c : cons) {
      auto found = c.form.coeffs.find(var);
      if (found == c.form.coeffs.end()) continue;
      const Rational k = found->second;
      c.form.coeffs.erase(found);
      c.form += expr.scaled(k);
    }
    out.substitutions.push_back({var, std::move(expr)});
    if (!sweep_constants(cons)) return std::nullopt;
  }

  // Fourier-Motzkin on the remaining inequalities.
  while (!cons.empty()) {
    std::set<Var> vars;
    for (const auto& c : cons) {
      for (const auto& [v, _] : c.form.coeffs) vars.insert(v);
    }
    if (vars.empty()) break;

    // Pick the variable with the cheapest lower*upper product.
    Var best = *vars.begin();
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (Var v : vars) {
      std::size_t lo = 0, hi = 0;
      for (const auto& c : cons) {
        auto it = c.form.coeffs.find(v);
        if (it == c.form.coeffs.end()) continue;
        (it->second > 0 ? lo : hi) += 1;
      }
      const std::size_t cost = lo * hi;
      if (cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }

    Elimination elim;
    elim.var = best;
    std::vector<Constraint> rest;
    for (auto& c : cons) {
      auto it = c.form.coeffs.find(best);
      if (it == c.form.coeffs.end()) {
        rest.push_back(std::move(c));
        continue;
      }
      const Rational coeff = it->second;
      LinearForm other = c.form;
      other.coeffs.erase(best);
      // coeff * v + other >= 0  =>  v >= -other/coeff (coeff > 0)
      //                             v <= -other/coeff (coeff < 0)
      LinearForm bound = other.scaled(Rational(-1) / coeff);
      const bool strict = c.rel == Rel::Gt;
      if (coeff > 0) {
        elim.lowers.push_back({std::move(bound), strict});
      } else {
        elim.uppers.push_back({std::move(bound), strict});
      }
    }
    for (const auto& lo : elim.lowers) {
      for (const auto& up : elim.uppers) {
        LinearForm diff = up.expr;
        diff -= lo.expr;
        Constraint c{std::move(diff), (lo.strict || up.strict) ? Rel::Gt : Rel::Ge};
        if (c.form.is_constant()) {
          if (!constant_holds(c)) return std::nullopt;
        } else {
          rest.push_back(std::move(c));
        }
      }
    }
    out.eliminations.push_back(std::move(elim));
    cons = std::move(rest);
  }

  for (const auto& c : cons) {
    if (!constant_holds(c)) return std::nullopt;
  }
  return out;
}

Rational pick_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                      std::mt19937_64* rng) {
  auto fraction = [&]() -> Rational {
    if (rng == nullptr) return Rational(1, 2);
    std::uniform_int_distribution<int> num(1, 15);
    return Rational(num(*rng), 16);
  };
  if (lo && hi) {
    // Equal bounds are only reachable when both are weak; a strict pair
    // would have produced a failing derived constraint earlier.
    if (*lo == *hi) return *lo;
    return *lo + (*hi - *lo) * fraction();
  }
  if (lo) return *lo + fraction() * 2;
  if (hi) return *hi - fraction() * 2;
  return fraction() * 2;
}

}  // namespace

bool feasible(const std::vector<Constraint>& constraints) {
  return eliminate(constraints).has_value();
}

std::optional<std::map<Var, Rational>> sample_point(const std::vector<Constraint>& constraints,
                                                    std::mt19937_64* rng) {
  auto solved = eliminate(constraints);
  if (!solved) return std::nullopt;

  std::map<Var, Rational> point;

  // Variables that fell out of the system without ever being pivoted
  // are free; give them values first so bound expressions can refer to
  // them.
  std::set<Var> pivoted;
  for (const auto& e : solved->eliminations) pivoted.insert(e.var);
  for (const auto& s : solved->substitutions) pivoted.insert(s.var);
  for (const auto& c : constraints) {
    for (const auto& [v, _] : c.form.coeffs) {
      if (!pivoted.contains(v)) point.emplace(v, 1);
    }
  }

  // FM-eliminated variables back to front; each interval is nonempty at
  // the partial point by construction.
  for (auto it = solved->eliminations.rbegin(); it != solved->eliminations.rend(); ++it) {
    std::optional<Rational> lo, hi;
    for (const auto& b : it->lowers) {
      const Rational v = b.expr.evaluate(point);
      if (!lo || v > *lo) lo = v;
    }
    for (const auto& b : it->uppers) {
      const Rational v = b.expr.evaluate(point);
      if (!hi || v < *hi) hi = v;
    }
    point[it->var] = pick_between(lo, hi, rng);
  }

  // Substituted variables, most recent first.
  for (auto it = solved->substitutions.rbegin(); it != solved->substitutions.rend(); ++it) {
    point[it->var] = it->expr.evaluate(point);
  }

  return point;
}

}  // namespace beldef::lin
