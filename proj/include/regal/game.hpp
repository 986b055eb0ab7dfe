#pragma once

#include "regal/affine.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace regal {

// Binary choice at an internal node. In the built-in games `Left` is
// "continue" and `Right` is "stop".
enum class Choice { Left, Right };

inline Choice other(Choice c) { return c == Choice::Left ? Choice::Right : Choice::Left; }
inline char choice_letter(Choice c) { return c == Choice::Left ? 'l' : 'r'; }

using NodeId = int;

struct Edge {
  NodeId target = -1;
  long long delta = 0;  // counter increment along this edge, >= 0
};

// Leaf: one payoff per agent (indexed by agent index).
struct LeafNode {
  std::vector<AffineUtility> payoffs;
};

struct InternalNode {
  int agent = -1;
  Edge left;
  Edge right;
};

using GameNode = std::variant<LeafNode, InternalNode>;

// A finite rooted graph whose (possibly infinite) unfolding is the game.
// Cycles encode the infinite repetition; edge deltas advance the counter
// that parametrizes leaf payoffs.
struct GameGraph {
  std::vector<std::string> agents;
  Preference preference = Preference::Maximize;
  std::vector<GameNode> nodes;
  std::vector<std::string> ids;  // parallel to `nodes`
  NodeId root = -1;

  int node_count() const { return static_cast<int>(nodes.size()); }
  bool is_leaf(NodeId n) const { return std::holds_alternative<LeafNode>(nodes[static_cast<size_t>(n)]); }
  const LeafNode& leaf(NodeId n) const { return std::get<LeafNode>(nodes[static_cast<size_t>(n)]); }
  const InternalNode& internal(NodeId n) const { return std::get<InternalNode>(nodes[static_cast<size_t>(n)]); }
  const std::string& id(NodeId n) const { return ids[static_cast<size_t>(n)]; }

  std::optional<NodeId> find_node(std::string_view node_id) const;
  std::optional<int> find_agent(std::string_view name) const;
};

// A game with a choice fixed at every internal node.
struct ProfileGraph {
  GameGraph game;               // the underlying game; choices live alongside
  std::vector<Choice> choices;  // parallel to game.nodes; meaningful at internal nodes

  Choice choice_at(NodeId n) const { return choices[static_cast<size_t>(n)]; }
  const Edge& chosen_edge(NodeId n) const {
    const auto& in = game.internal(n);
    return choice_at(n) == Choice::Left ? in.left : in.right;
  }
};

// Erases the choices: the game a profile is played on. The graph is shared
// unchanged, so profiles differing only in choices map to identical games.
inline const GameGraph& underlying_game(const ProfileGraph& p) { return p.game; }

ProfileGraph with_choices(const GameGraph& g, std::vector<Choice> choices);

struct ValidationIssue {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string node_id;  // offending node, empty for graph-level issues
  std::string rule;
  std::string message;
};

// Empty report iff all structural invariants hold. Unreachable nodes are
// reported as warnings.
std::vector<ValidationIssue> validate(const GameGraph& g);
std::vector<ValidationIssue> validate(const ProfileGraph& p);

bool has_errors(const std::vector<ValidationIssue>& issues);

// Nodes reachable from `start` through both edges of every internal node.
std::vector<bool> reachable_from(const GameGraph& g, NodeId start);

// Reachable node ids in breadth-first order from the root.
std::vector<NodeId> bfs_order(const GameGraph& g, NodeId start);

// The induced subgraph of everything reachable from `node`, re-rooted there.
// Node ids are preserved; indices are remapped in ascending source order.
GameGraph subgraph_from(const GameGraph& g, NodeId node);
ProfileGraph subgraph_from(const ProfileGraph& p, NodeId node);

// The finite sequence of choices made when playing `p` from the root.
struct History {
  std::vector<Choice> choices;
  bool terminated = false;  // true iff a leaf was reached within the budget
};

History history(const ProfileGraph& p, std::size_t max_steps);

}  // namespace regal
