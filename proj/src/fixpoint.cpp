#include "regal/fixpoint.hpp"

#include "regal/errors.hpp"

#include <cassert>

namespace regal {

namespace {

NodeSet iterate(const GameGraph& g, const LocalRule& rule, bool start, int* rounds) {
  const size_t n = g.nodes.size();
  NodeSet current(n, start);
  int changing_rounds = 0;
  for (;;) {
    NodeSet next(n);
    bool changed = false;
    for (NodeId i = 0; i < static_cast<NodeId>(n); ++i) {
      next[static_cast<size_t>(i)] = rule(i, current);
      changed |= next[static_cast<size_t>(i)] != current[static_cast<size_t>(i)];
    }
    if (!changed) break;
    ++changing_rounds;
    current = std::move(next);
  }
  // A monotone rule stabilizes within |nodes| rounds.
  assert(changing_rounds <= static_cast<int>(n));
  if (rounds) *rounds = changing_rounds;
  return current;
}

}  // namespace

NodeSet lfp(const GameGraph& g, const LocalRule& rule, int* rounds) {
  return iterate(g, rule, false, rounds);
}

NodeSet gfp(const GameGraph& g, const LocalRule& rule, int* rounds) {
  return iterate(g, rule, true, rounds);
}

NodeSet leads_to_leaf(const ProfileGraph& p) {
  return lfp(p.game, [&p](NodeId n, const NodeSet& s) {
    if (p.game.is_leaf(n)) return true;
    return static_cast<bool>(s[static_cast<size_t>(p.chosen_edge(n).target)]);
  });
}

NodeSet always_leads_to_leaf(const ProfileGraph& p) {
  const NodeSet ltl = leads_to_leaf(p);
  return gfp(p.game, [&p, &ltl](NodeId n, const NodeSet& s) {
    if (p.game.is_leaf(n)) return true;
    if (!ltl[static_cast<size_t>(n)]) return false;
    const auto& in = p.game.internal(n);
    return static_cast<bool>(s[static_cast<size_t>(in.left.target)]) &&
           static_cast<bool>(s[static_cast<size_t>(in.right.target)]);
  });
}

NodeSet box(const ProfileGraph& p, const NodeSet& property) {
  return gfp(p.game, [&p, &property](NodeId n, const NodeSet& s) {
    if (!property[static_cast<size_t>(n)]) return false;
    if (p.game.is_leaf(n)) return true;
    const auto& in = p.game.internal(n);
    return static_cast<bool>(s[static_cast<size_t>(in.left.target)]) &&
           static_cast<bool>(s[static_cast<size_t>(in.right.target)]);
  });
}

NodeSet is_infinite(const GameGraph& g) {
  return gfp(g, [&g](NodeId n, const NodeSet& s) {
    if (g.is_leaf(n)) return false;
    const auto& in = g.internal(n);
    return static_cast<bool>(s[static_cast<size_t>(in.left.target)]) ||
           static_cast<bool>(s[static_cast<size_t>(in.right.target)]);
  });
}

namespace {

UtilityResult undefined_result(size_t agents) {
  UtilityResult r;
  r.per_agent.resize(agents);
  return r;
}

}  // namespace

std::vector<UtilityResult> utilities_table(const ProfileGraph& p) {
  const NodeSet ltl = leads_to_leaf(p);
  const size_t agents = p.game.agents.size();
  std::vector<UtilityResult> table(p.game.nodes.size(), undefined_result(agents));
  std::vector<bool> done(p.game.nodes.size(), false);
  // Within the leads-to-leaf set the chosen-path graph is acyclic (a cycle
  // would never reach a leaf), so a straight walk with backpatching works.
  for (NodeId n = 0; n < p.game.node_count(); ++n) {
    if (!ltl[static_cast<size_t>(n)] || done[static_cast<size_t>(n)]) continue;
    std::vector<NodeId> path;
    NodeId cur = n;
    while (!done[static_cast<size_t>(cur)] && !p.game.is_leaf(cur)) {
      path.push_back(cur);
      done[static_cast<size_t>(cur)] = true;  // placed on the current path
      cur = p.chosen_edge(cur).target;
    }
    if (p.game.is_leaf(cur) && !done[static_cast<size_t>(cur)]) {
      auto& leaf_result = table[static_cast<size_t>(cur)];
      const auto& payoffs = p.game.leaf(cur).payoffs;
      for (size_t a = 0; a < agents; ++a) leaf_result.per_agent[a] = payoffs[a];
      done[static_cast<size_t>(cur)] = true;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const Edge& e = p.chosen_edge(*it);
      const auto& child = table[static_cast<size_t>(e.target)];
      auto& mine = table[static_cast<size_t>(*it)];
      for (size_t a = 0; a < agents; ++a)
        mine.per_agent[a] = child.per_agent[a]->shifted(e.delta);
    }
  }
  return table;
}

UtilityResult utilities(const ProfileGraph& p, NodeId node) {
  if (node < 0 || node >= p.game.node_count()) throw ModelError("unknown node");
  return utilities_table(p)[static_cast<size_t>(node)];
}

}  // namespace regal
