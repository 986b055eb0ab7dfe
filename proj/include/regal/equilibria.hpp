#pragma once

#include "regal/fixpoint.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace regal {

// One entry per reachable internal node, in breadth-first order from the
// root. Utilities are the deciding agent's, as functions of the counter on
// arrival; they are absent when the corresponding child does not lead to a
// leaf.
struct SgpeNodeRecord {
  NodeId node = -1;
  int agent = -1;
  Choice chosen = Choice::Left;
  std::optional<AffineUtility> chosen_utility;
  std::optional<AffineUtility> other_utility;
  bool altl = false;           // node always leads to a leaf
  bool comparison_ok = false;  // other <=ut chosen, uniformly over k
  std::optional<long long> fail_k;  // smallest counter where it fails
};

enum class SgpeFailure { None, NotAlwaysLeadsToLeaf, ComparisonFails };

struct SgpeCertificate {
  bool verdict = false;
  std::vector<SgpeNodeRecord> records;
  std::optional<NodeId> offending_node;  // first failing node, BFS order
  SgpeFailure reason = SgpeFailure::None;
  std::optional<long long> fail_k;
};

// Subgame-perfect equilibrium check. Every reachable node must always lead
// to a leaf and the deciding agent's other-side utility must be at most as
// good as the chosen-side utility for every counter value k >= 0 (the graph
// encodes the whole n-indexed family, so the comparison is uniform in k).
// With `instance` set, comparisons are evaluated at that single counter
// value instead.
SgpeCertificate check_sgpe(const ProfileGraph& p, std::optional<long long> instance = {});

struct DeviationChange {
  std::string position;  // choice string from the root to the changed node
  NodeId node = -1;
  Choice from = Choice::Left;
  Choice to = Choice::Left;
};

struct DeviationWitness {
  int agent = -1;
  std::vector<DeviationChange> changes;
  AffineUtility deviation_utility;  // function of the root counter
  AffineUtility original_utility;
  long long k_min = 0;  // smallest counter where the deviation is strictly better
};

// Searches the depth-bounded unfolding for a profitable deviation of one
// agent: at the agent's nodes both children are explored (flips recorded),
// other agents keep their choices, cut nodes continue with the original
// profile's own play (undefined continuations never win). In the default
// uniform mode candidate utilities are compared as affine families over all
// k >= 0; with `instance` set everything is evaluated at that counter value.
// Returns nothing when the profile's own utility is undefined (there is
// nothing to beat) or no deviation is strictly better.
std::optional<DeviationWitness> best_deviation(const ProfileGraph& p, int agent, int depth,
                                               std::optional<long long> instance = {});

struct NashVerdict {
  enum class Kind { Refuted, NoCounterexampleUpToDepth, ImpliedBySgpe };
  Kind kind = Kind::NoCounterexampleUpToDepth;
  int depth = 0;
  std::optional<DeviationWitness> witness;  // present iff Refuted
};

// Nash check by bounded best-deviation search over every agent. A passing
// subgame-perfect certificate short-circuits (an SGPE is a Nash
// equilibrium); otherwise absence of a counterexample up to the horizon is
// reported as exactly that, never as "Nash holds".
NashVerdict check_nash(const ProfileGraph& p, int depth, std::optional<long long> instance = {});

// s' <=_a s: agent a's utility under p1 is at most as good as under p2.
// Both roots must lead to a leaf (ModelError otherwise). Uniform over all
// counters by default, or at a single counter with `instance`.
bool profile_leq(const ProfileGraph& p1, const ProfileGraph& p2, int agent,
                 std::optional<long long> instance = {});

struct Convertibility {
  bool ok = false;
  std::string reason;  // explanation when !ok
};

// p1 and p2 differ only in finitely many of agent a's choices (modulo
// bisimilarity): their product graph must match structurally everywhere
// reachable (equal leaves, agents, deltas, and equal choices at other
// agents' nodes), and no product state with a differing choice may lie on
// or be reachable from a cycle — such a state would repeat at infinitely
// many positions of the unfolding.
Convertibility convertible(const ProfileGraph& p1, const ProfileGraph& p2, int agent);

// All tie-respecting backward-induction solutions of a finite acyclic game:
// at every node each choice whose subtree value is maximal for the deciding
// agent is kept, and ties multiply the solution set (capped; exceeding the
// cap or cyclic input raises ModelError). Every returned profile satisfies
// check_sgpe on the tree.
std::vector<ProfileGraph> backward_induction(const GameGraph& tree, std::size_t cap = 64);

}  // namespace regal
