#include "setcalc/tree.hpp"

#include <algorithm>
#include <sstream>

namespace setcalc {

std::vector<int> ScenarioTree::descendants_at(int n, int s) const {
  if (nodes[n].time > s) throw TreeError("descendants_at: node is later than the target time");
  std::vector<int> stack{n}, out;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    if (nodes[cur].time == s) {
      out.push_back(cur);
      continue;
    }
    for (int c : nodes[cur].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ScenarioTree::subtree_until(int n, int s) const {
  std::vector<int> stack{n}, out;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    if (nodes[cur].time > s) continue;
    out.push_back(cur);
    for (int c : nodes[cur].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScenarioTree validate_tree(ScenarioTree t) {
  auto fail = [](const std::string& msg) { throw TreeError(msg); };

  if (t.dimension < 1) fail("dimension must be at least 1");
  if (t.dimension > 4) fail("dimension " + std::to_string(t.dimension) + " unsupported (max 4)");
  if (t.horizon < 0) fail("horizon must be nonnegative");
  if (t.nodes.empty()) fail("tree has no nodes");

  t.root = -1;
  for (int i = 0; i < t.num_nodes(); ++i) {
    const auto& n = t.nodes[i];
    if (n.parent < 0) {
      if (t.root >= 0) fail("multiple roots");
      t.root = i;
      if (n.time != 0) fail("root must be at time 0");
    } else {
      if (n.parent >= t.num_nodes()) fail("dangling node: parent of node " + std::to_string(n.id));
      if (n.time != t.nodes[n.parent].time + 1)
        fail("node " + std::to_string(n.id) + " time inconsistent with parent");
    }
    if (n.time < 0 || n.time > t.horizon)
      fail("node " + std::to_string(n.id) + " outside horizon");
    if (n.cond_prob <= 0 || n.cond_prob > 1)
      fail("nonpositive probability at node " + std::to_string(n.id));
  }
  if (t.root < 0) fail("no root");

  for (auto& n : t.nodes) n.children.clear();
  for (int i = 0; i < t.num_nodes(); ++i)
    if (t.nodes[i].parent >= 0) t.nodes[t.nodes[i].parent].children.push_back(i);

  for (int i = 0; i < t.num_nodes(); ++i) {
    const auto& n = t.nodes[i];
    if (n.children.empty()) {
      if (n.time != t.horizon) fail("leaf before horizon at node " + std::to_string(n.id));
      continue;
    }
    Rational sum = 0;
    for (int c : n.children) sum += t.nodes[c].cond_prob;
    if (sum != 1) {
      std::ostringstream os;
      os << "probabilities sum to " << rat_str(sum) << " != 1 under node " << n.id;
      fail(os.str());
    }
  }

  // Reachability: every node hangs off the root.
  {
    std::vector<char> seen(t.num_nodes(), 0);
    std::vector<int> stack{t.root};
    seen[t.root] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int c : t.nodes[cur].children) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
    for (int i = 0; i < t.num_nodes(); ++i)
      if (!seen[i]) fail("dangling node " + std::to_string(t.nodes[i].id));
  }

  t.nodes[t.root].cond_prob = 1;
  t.by_time.assign(t.horizon + 1, {});
  // Parents precede children in index order is not guaranteed; walk by depth.
  std::vector<int> order{t.root};
  t.nodes[t.root].abs_prob = 1;
  for (size_t q = 0; q < order.size(); ++q) {
    int cur = order[q];
    t.by_time[t.nodes[cur].time].push_back(cur);
    for (int c : t.nodes[cur].children) {
      t.nodes[c].abs_prob = t.nodes[cur].abs_prob * t.nodes[c].cond_prob;
      order.push_back(c);
    }
  }
  for (auto& slice : t.by_time) std::sort(slice.begin(), slice.end());

  t.validated = true;
  return t;
}

AdaptedVectorProcess conditional_expectation_vector(const ScenarioTree& tree,
                                                    const AdaptedVectorProcess& x, int s, int t) {
  if (t > s) throw TreeError("conditional expectation: target time after source time");
  if (!x.defined_times.count(s)) throw TreeError("process not defined at source time");
  AdaptedVectorProcess out;
  out.defined_times.insert(t);
  for (int n : tree.at_time(t)) {
    Vec acc(tree.dimension, Rational(0));
    for (int m : tree.descendants_at(n, s)) {
      Rational w = tree.node(m).abs_prob / tree.node(n).abs_prob;
      const Vec& xv = x.values.at(m);
      for (int i = 0; i < tree.dimension; ++i) acc[i] += w * xv[i];
    }
    out.values[n] = std::move(acc);
  }
  return out;
}

AdaptedVectorProcess constant_vector_process(const ScenarioTree& tree, int t, const Vec& value) {
  AdaptedVectorProcess p;
  p.defined_times.insert(t);
  for (int n : tree.at_time(t)) p.values[n] = value;
  return p;
}

}  // namespace setcalc
