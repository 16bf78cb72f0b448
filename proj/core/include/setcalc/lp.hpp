#pragma once

#include "setcalc/linalg.hpp"

namespace setcalc {

enum class Relation { GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  Vec coeffs;
  Relation rel;
  Rational rhs;
};

/// Linear program over free rational variables:
///   optimize objective . x  subject to  coeffs . x (>=|=) rhs  per row.
struct LinearProgram {
  int num_vars = 0;
  std::vector<LpConstraint> constraints;
  Vec objective;  // length num_vars; all-zero for pure feasibility queries
  Sense sense = Sense::Maximize;

  explicit LinearProgram(int n = 0) : num_vars(n), objective(n, Rational(0)) {}
  void add(Vec coeffs, Relation rel, Rational rhs);
};

/// Solver result with an exactly checkable certificate per status:
///  - Optimal: `point` attains `value`; `duals` y satisfy y.A = objective,
///    y.b = value, complementary slackness, and y_i >= 0 (Minimize) resp.
///    y_i <= 0 (Maximize) on GreaterEqual rows.
///  - Infeasible: `farkas` l with l_i >= 0 on GreaterEqual rows, l.A = 0,
///    l.b > 0.
///  - Unbounded: `point` feasible, `ray` r with A r >= 0 on GreaterEqual
///    rows, A r = 0 on Equal rows, and objective . r improving strictly.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vec point;
  Rational value = 0;
  Vec duals;
  Vec farkas;
  Vec ray;
};

LpOutcome lp_solve(const LinearProgram& lp);

/// Re-derives the status claim by exact substitution; used in tests and as a
/// guard around every arbitrage/price-system verdict built on LP output.
bool lp_certificate_valid(const LinearProgram& lp, const LpOutcome& out);

}  // namespace setcalc
