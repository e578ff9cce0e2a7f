#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ivkit/rational.hpp"

namespace ivkit::lp {

using Matrix = std::vector<std::vector<Rational>>;

enum class Status { Optimal, Infeasible, Unbounded };

struct SimplexResult {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic
/// (two-phase tableau simplex with Bland's anti-cycling rule).
SimplexResult maximize(const Matrix& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c);

/// A point of {A x = b, x >= 0}, if any.
std::optional<std::vector<Rational>> feasible_point(const Matrix& a, const std::vector<Rational>& b);

enum class Relation { Equal, GreaterEqual, Greater };

/// coeffs . x  (rel)  rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::GreaterEqual;
  Rational rhs;
};

struct EliminationStats {
  std::size_t max_rows = 0;
  std::size_t combined = 0;
};

/// Feasibility by Fourier-Motzkin elimination of every variable. Equalities are
/// substituted away first; inequality pairs are combined with Chernikov's
/// history rule discarding redundant rows.
bool fourier_motzkin_feasible(const std::vector<Constraint>& system, std::size_t num_vars,
                              EliminationStats* stats = nullptr);

/// Projection onto the variables not flagged in eliminate_var: the returned
/// constraints mention only kept variables. nullopt when the system is infeasible.
std::optional<std::vector<Constraint>> fourier_motzkin_project(const std::vector<Constraint>& system,
                                                               std::size_t num_vars,
                                                               const std::vector<bool>& eliminate_var,
                                                               EliminationStats* stats = nullptr);

/// Convenience: the system {A x = b, x >= 0} in the form above.
std::vector<Constraint> standard_form_system(const Matrix& a, const std::vector<Rational>& b);

}  // namespace ivkit::lp
