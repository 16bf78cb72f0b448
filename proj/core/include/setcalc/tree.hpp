#pragma once

#include "setcalc/polyhedron.hpp"

#include <map>
#include <optional>
#include <set>

namespace setcalc {

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite filtered probability space as a rooted tree. Node indices are
/// positions in `nodes`; `id` preserves the external identifier for I/O.
/// Atoms of F_t are the nodes at time t; time-0 is a single root, so F_0 is
/// trivial. Strictly positive conditional probabilities keep null sets empty,
/// which collapses the generalised conditional expectation onto the plain one.
struct ScenarioTree {
  struct Node {
    long id = 0;
    int parent = -1;  // index; -1 for the root
    std::vector<int> children;
    int time = 0;
    Rational cond_prob = 1;
    Rational abs_prob = 1;  // cached by validate_tree

    // Optional market payloads carried by the JSON schema.
    std::optional<Rational> bid, ask;
    std::optional<std::vector<Vec>> cone_generators;
    std::optional<Vec> claim;
  };

  int dimension = 0;
  int horizon = 0;
  std::vector<Node> nodes;
  int root = -1;
  bool validated = false;

  const Node& node(int i) const { return nodes.at(i); }
  int num_nodes() const { return static_cast<int>(nodes.size()); }
  const std::vector<int>& at_time(int t) const { return by_time.at(t); }
  bool is_leaf(int i) const { return nodes[i].children.empty(); }

  /// Indices of the time-s nodes in the subtree rooted at n (n itself when
  /// node n already lives at time s). Requires time(n) <= s.
  std::vector<int> descendants_at(int n, int s) const;

  /// All nodes of the subtree rooted at n with time in [time(n), s].
  std::vector<int> subtree_until(int n, int s) const;

  std::vector<std::vector<int>> by_time;  // cached by validate_tree
};

/// Checks every structural invariant and caches absolute probabilities and
/// the time slices. Throws TreeError naming the first violation.
ScenarioTree validate_tree(ScenarioTree raw);

/// F_t-measurable rational-vector data: one value per node at each defined
/// time (measurability = constancy on atoms).
struct AdaptedVectorProcess {
  std::map<int, Vec> values;  // node index -> value
  std::set<int> defined_times;
};

/// Node-indexed random sets; the engine's value type for solvency sets,
/// acceptance images and price sets.
struct AdaptedSetProcess {
  std::map<int, Polyhedron> values;
  std::set<int> defined_times;
};

/// E(x | F_t) for x defined at time s >= t: at a time-t node the value is
/// the P(m)/P(n)-weighted sum over its time-s descendants m.
AdaptedVectorProcess conditional_expectation_vector(const ScenarioTree& tree,
                                                    const AdaptedVectorProcess& x, int s, int t);

AdaptedVectorProcess constant_vector_process(const ScenarioTree& tree, int t, const Vec& value);

}  // namespace setcalc
