#pragma once

#include "regal/equilibria.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace regal {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

// One step of an escalation: at `node` the deciding agent continues in
// `direction` towards `next`, and doing so is rational because `profile`
// (over the subgame rooted at `node`) is a subgame perfect equilibrium with
// exactly that root choice.
struct EscalationStep {
  NodeId node = -1;
  int agent = -1;
  Choice direction = Choice::Left;
  NodeId next = -1;
  ProfileGraph profile;
};

// A lasso in the game: `stem` leads from the root to the cycle, `cycle` is
// non-empty and the steps cover stem then cycle in order. Replaying the
// cycle forever yields the infinite sequence of subgames, each entered by a
// rational continuation.
struct EscalationWitness {
  std::vector<NodeId> stem;
  std::vector<NodeId> cycle;
  std::vector<EscalationStep> steps;
};

// First (in node-index / left-before-right order) profile over the subgame
// rooted at `node` whose root choice is `dir` and which passes check_sgpe.
// Enumerates all choice assignments of the reachable subgraph; throws
// EnumerationCapExceeded when it has more than `cap` internal nodes.
std::optional<ProfileGraph> sgpe_with_choice(const GameGraph& g, NodeId node, Choice dir,
                                             std::size_t cap = kDefaultEnumerationCap);

// Detects escalation among profiles representable over g's own graph: a
// reachable cycle in the graph of rational continuations (an edge n -> m
// exists iff sgpe_with_choice(g, n, dir) succeeds and the dir-child m is
// internal). A witness realizes the escalation; absence of one means no
// such profile escalates, not that no escalation exists at all.
std::optional<EscalationWitness> find_escalation(const GameGraph& g,
                                                 std::size_t cap = kDefaultEnumerationCap);

// Independent re-check of a witness: step profiles pass check_sgpe, their
// games are bisimilar to the step subgames, root choices continue into the
// successor step, and the cycle closes.
bool verify_escalation_witness(const GameGraph& g, const EscalationWitness& w);

}  // namespace regal
