#pragma once

#include "setcalc/linalg.hpp"

#include <stdexcept>

namespace setcalc {

/// Generator description of a polyhedral cone: span(lines) + cone(rays).
/// lines form an RREF-canonical basis; rays are the extreme rays of the
/// quotient cone, reduced modulo the lines, coprime-integer scaled, sorted.
/// Two equal cones always produce identical descriptions.
struct ConeDescription {
  std::vector<Vec> lines;
  std::vector<Vec> rays;
};

struct RayBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Intermediate-generator budget for the double description method.
/// Defaults to 5000; the SETCALC_RAY_BUDGET environment variable overrides.
int default_ray_budget();

/// Extreme description of {z in Q^dim : <h, z> >= 0 for every h in normals}
/// by incremental constraint insertion. Throws RayBudgetExceeded when an
/// intermediate ray set outgrows the budget.
ConeDescription dual_description(std::vector<Vec> normals, int dim, int budget = -1);

}  // namespace setcalc
