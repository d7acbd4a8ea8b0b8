#pragma once

// Exact rational linear programming (two-phase simplex, Bland's rule).

#include "tdesc/int_matrix.hpp"

#include <vector>

namespace tdesc::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

/// Maximise objective . x subject to the constraints.  Variables are free
/// unless marked nonnegative.
Result maximize(const std::vector<Rational>& objective, const std::vector<Constraint>& constraints,
                const std::vector<bool>& nonnegative = {});

/// Convenience: a constraint with integer coefficients.
Constraint make_constraint(const IntVector& coeffs, Relation rel, const Int& rhs);

}  // namespace tdesc::lp
