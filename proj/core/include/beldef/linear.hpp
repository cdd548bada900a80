#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "beldef/rational.hpp"

namespace beldef::lin {

using Var = int;

/// Sparse linear form: sum of coeff * x_v plus a constant.
struct LinearForm {
  std::map<Var, Rational> coeffs;
  Rational constant = 0;

  void add(Var v, const Rational& c);
  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm scaled(const Rational& factor) const;
  Rational evaluate(const std::map<Var, Rational>& point) const;
  bool is_constant() const { return coeffs.empty(); }
};

enum class Rel { Eq, Ge, Gt };  // form = 0, form >= 0, form > 0

struct Constraint {
  LinearForm form;
  Rel rel = Rel::Ge;
};

// Convenience builders for "lhs REL rhs" style constraints.
Constraint eq(LinearForm lhs, LinearForm rhs);
Constraint ge(LinearForm lhs, LinearForm rhs);  // lhs >= rhs
Constraint gt(LinearForm lhs, LinearForm rhs);  // lhs >  rhs

/// Exact satisfiability of a finite system of rational linear
/// constraints, strict inequalities included. Equalities are removed by
/// substitution, the rest by Fourier-Motzkin elimination; a derived
/// constant constraint that fails witnesses infeasibility.
bool feasible(const std::vector<Constraint>& constraints);

/// A point satisfying all constraints, when one exists. With `rng` the
/// interior choices are randomized, otherwise deterministic midpoints.
std::optional<std::map<Var, Rational>> sample_point(const std::vector<Constraint>& constraints,
                                                    std::mt19937_64* rng = nullptr);

}  // namespace beldef::lin
