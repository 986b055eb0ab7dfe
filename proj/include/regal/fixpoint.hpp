#pragma once

#include "regal/game.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace regal {

// Extension of a predicate over one graph's nodes.
using NodeSet = std::vector<bool>;

// Node-local rule: membership of a node may depend only on the node itself
// and on the current membership of its children. Must be monotone; this is
// a contract, not checked.
using LocalRule = std::function<bool(NodeId, const NodeSet&)>;

// Least fixpoint, iterated from the empty set. Stabilizes in at most
// |nodes| changing rounds; `rounds` reports how many were needed.
NodeSet lfp(const GameGraph& g, const LocalRule& rule, int* rounds = nullptr);

// Greatest fixpoint, iterated from the full set.
NodeSet gfp(const GameGraph& g, const LocalRule& rule, int* rounds = nullptr);

// Nodes from which following the profile's choices reaches a leaf.
NodeSet leads_to_leaf(const ProfileGraph& p);

// Nodes all of whose descendants (through both children) lead to a leaf.
NodeSet always_leads_to_leaf(const ProfileGraph& p);

// "Always P": P holds here and at every descendant.
NodeSet box(const ProfileGraph& p, const NodeSet& property);

// Nodes with an infinite branch below them; leaves never qualify.
NodeSet is_infinite(const GameGraph& g);

// Per-agent utility of the play starting at a node, as a function of the
// counter value on arrival. Defined for all agents iff the node leads to a
// leaf; otherwise undefined for all agents.
struct UtilityResult {
  std::vector<std::optional<AffineUtility>> per_agent;

  bool defined() const {
    for (const auto& u : per_agent)
      if (!u) return false;
    return !per_agent.empty();
  }
};

UtilityResult utilities(const ProfileGraph& p, NodeId node);

// All nodes at once (indexable by NodeId).
std::vector<UtilityResult> utilities_table(const ProfileGraph& p);

}  // namespace regal
