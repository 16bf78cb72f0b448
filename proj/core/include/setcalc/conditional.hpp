#pragma once

#include "setcalc/tree.hpp"

namespace setcalc {

/// Conditional operators on adapted set processes, realized over tree atoms.
/// For a time-t node the time-s descendants are the atoms of F_s refining
/// its atom of F_t, so:
///   core        -> intersection over descendants (largest F_t-measurable
///                  random set inside X); may be empty,
///   hull        -> convex hull of the union (smallest F_t-measurable convex
///                  closed set containing X),
///   expectation -> P(m)/P(n)-weighted Minkowski sum; on a finite tree this
///                  is exactly the set of conditional expectations of
///                  selections, and it propagates emptiness.

AdaptedSetProcess cond_core(const ScenarioTree& tree, const AdaptedSetProcess& x, int s, int t);

/// Throws if some node set is empty (the hull is undefined there).
AdaptedSetProcess cond_hull(const ScenarioTree& tree, const AdaptedSetProcess& x, int s, int t);

AdaptedSetProcess cond_expectation_set(const ScenarioTree& tree, const AdaptedSetProcess& x,
                                       int s, int t);

/// Componentwise conditional essential supremum / infimum: per time-t node
/// the max / min over its time-s descendants.
AdaptedVectorProcess cond_esssup(const ScenarioTree& tree, const AdaptedVectorProcess& x, int s,
                                 int t);
AdaptedVectorProcess cond_essinf(const ScenarioTree& tree, const AdaptedVectorProcess& x, int s,
                                 int t);

}  // namespace setcalc
