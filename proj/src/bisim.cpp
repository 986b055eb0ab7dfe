#include "regal/bisim.hpp"

#include "regal/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace regal {

namespace {

// Agent index translation a -> b, required to be a bijection on names.
std::vector<int> agent_map(const GameGraph& a, const GameGraph& b) {
  if (a.agents.size() != b.agents.size()) throw ModelError("incomparable models: agent sets differ");
  if (a.preference != b.preference) throw ModelError("incomparable models: preferences differ");
  std::vector<int> map(a.agents.size(), -1);
  for (size_t i = 0; i < a.agents.size(); ++i) {
    auto j = b.find_agent(a.agents[i]);
    if (!j) throw ModelError("incomparable models: agent sets differ");
    map[i] = *j;
  }
  return map;
}

// Coinductive pair exploration: grow a candidate bisimulation from the root
// pair; a label mismatch refutes, a revisited pair is consistent by
// assumption. On the finite product graph this computes the greatest
// bisimulation restricted to reachable pairs.
bool explore(const GameGraph& a, const GameGraph& b, const std::vector<Choice>* ca,
             const std::vector<Choice>* cb) {
  const std::vector<int> amap = agent_map(a, b);
  std::set<std::pair<NodeId, NodeId>> assumed;
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root, b.root}};
  while (!stack.empty()) {
    auto [na, nb] = stack.back();
    stack.pop_back();
    if (!assumed.insert({na, nb}).second) continue;
    if (a.is_leaf(na) != b.is_leaf(nb)) return false;
    if (a.is_leaf(na)) {
      const auto& pa = a.leaf(na).payoffs;
      const auto& pb = b.leaf(nb).payoffs;
      for (size_t i = 0; i < pa.size(); ++i)
        if (!(pa[i] == pb[static_cast<size_t>(amap[i])])) return false;
      continue;
    }
    const auto& ia = a.internal(na);
    const auto& ib = b.internal(nb);
    if (amap[static_cast<size_t>(ia.agent)] != ib.agent) return false;
    if (ia.left.delta != ib.left.delta || ia.right.delta != ib.right.delta) return false;
    if (ca && (*ca)[static_cast<size_t>(na)] != (*cb)[static_cast<size_t>(nb)]) return false;
    stack.push_back({ia.left.target, ib.left.target});
    stack.push_back({ia.right.target, ib.right.target});
  }
  return true;
}

}  // namespace

bool bisimilar(const GameGraph& a, const GameGraph& b) { return explore(a, b, nullptr, nullptr); }

bool bisimilar(const ProfileGraph& a, const ProfileGraph& b) {
  return explore(a.game, b.game, &a.choices, &b.choices);
}

}  // namespace regal
