#include "regal/game.hpp"

#include "regal/errors.hpp"

#include <deque>

namespace regal {

std::optional<NodeId> GameGraph::find_node(std::string_view node_id) const {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == node_id) return static_cast<NodeId>(i);
  return std::nullopt;
}

std::optional<int> GameGraph::find_agent(std::string_view name) const {
  for (size_t i = 0; i < agents.size(); ++i)
    if (agents[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

ProfileGraph with_choices(const GameGraph& g, std::vector<Choice> choices) {
  if (choices.size() != g.nodes.size())
    throw ModelError("choice vector size does not match the node count");
  return ProfileGraph{g, std::move(choices)};
}

namespace {

void validate_graph(const GameGraph& g, std::vector<ValidationIssue>& out) {
  using Severity = ValidationIssue::Severity;
  const int n = g.node_count();
  if (n == 0) {
    out.push_back({Severity::Error, "", "nonempty", "graph has no nodes"});
    return;
  }
  if (g.root < 0 || g.root >= n) {
    out.push_back({Severity::Error, "", "root", "root is not a declared node"});
    return;
  }
  if (g.ids.size() != g.nodes.size())
    out.push_back({Severity::Error, "", "ids", "node id list does not match the node count"});
  for (NodeId i = 0; i < n; ++i) {
    const std::string& id = i < static_cast<int>(g.ids.size()) ? g.ids[static_cast<size_t>(i)] : std::string{};
    if (g.is_leaf(i)) {
      if (g.leaf(i).payoffs.size() != g.agents.size())
        out.push_back({Severity::Error, id, "leaf-totality",
                       "leaf " + id + " does not assign a payoff to every agent"});
    } else {
      const auto& in = g.internal(i);
      if (in.agent < 0 || in.agent >= static_cast<int>(g.agents.size()))
        out.push_back({Severity::Error, id, "agent", "node " + id + " names no declared agent"});
      for (const Edge* e : {&in.left, &in.right}) {
        if (e->target < 0 || e->target >= n)
          out.push_back({Severity::Error, id, "unknown-target",
                         "node " + id + " has an edge to an undeclared node"});
        if (e->delta < 0)
          out.push_back({Severity::Error, id, "delta", "node " + id + " has a negative counter increment"});
      }
    }
  }
  if (has_errors(out)) return;
  const auto reach = reachable_from(g, g.root);
  for (NodeId i = 0; i < n; ++i)
    if (!reach[static_cast<size_t>(i)])
      out.push_back({Severity::Warning, g.id(i), "unreachable",
                     "node " + g.id(i) + " is unreachable from the root"});
}

}  // namespace

std::vector<ValidationIssue> validate(const GameGraph& g) {
  std::vector<ValidationIssue> out;
  validate_graph(g, out);
  return out;
}

std::vector<ValidationIssue> validate(const ProfileGraph& p) {
  std::vector<ValidationIssue> out;
  validate_graph(p.game, out);
  if (p.choices.size() != p.game.nodes.size())
    out.push_back({ValidationIssue::Severity::Error, "", "choices",
                   "profile does not carry a choice for every node"});
  return out;
}

bool has_errors(const std::vector<ValidationIssue>& issues) {
  for (const auto& i : issues)
    if (i.severity == ValidationIssue::Severity::Error) return true;
  return false;
}

std::vector<bool> reachable_from(const GameGraph& g, NodeId start) {
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<NodeId> queue{start};
  seen[static_cast<size_t>(start)] = true;
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    if (g.is_leaf(n)) continue;
    const auto& in = g.internal(n);
    for (NodeId t : {in.left.target, in.right.target}) {
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<NodeId> bfs_order(const GameGraph& g, NodeId start) {
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<NodeId> order;
  std::deque<NodeId> queue{start};
  seen[static_cast<size_t>(start)] = true;
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    order.push_back(n);
    if (g.is_leaf(n)) continue;
    const auto& in = g.internal(n);
    for (NodeId t : {in.left.target, in.right.target}) {
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

GameGraph subgraph_from(const GameGraph& g, NodeId node) {
  const auto reach = reachable_from(g, node);
  std::vector<NodeId> remap(g.nodes.size(), -1);
  GameGraph out;
  out.agents = g.agents;
  out.preference = g.preference;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!reach[static_cast<size_t>(i)]) continue;
    remap[static_cast<size_t>(i)] = static_cast<NodeId>(out.nodes.size());
    out.nodes.push_back(g.nodes[static_cast<size_t>(i)]);
    out.ids.push_back(g.id(i));
  }
  for (auto& gn : out.nodes) {
    if (auto* in = std::get_if<InternalNode>(&gn)) {
      in->left.target = remap[static_cast<size_t>(in->left.target)];
      in->right.target = remap[static_cast<size_t>(in->right.target)];
    }
  }
  out.root = remap[static_cast<size_t>(node)];
  return out;
}

ProfileGraph subgraph_from(const ProfileGraph& p, NodeId node) {
  const auto reach = reachable_from(p.game, node);
  ProfileGraph out;
  out.game = subgraph_from(p.game, node);
  for (NodeId i = 0; i < p.game.node_count(); ++i)
    if (reach[static_cast<size_t>(i)]) out.choices.push_back(p.choices[static_cast<size_t>(i)]);
  return out;
}

History history(const ProfileGraph& p, std::size_t max_steps) {
  History h;
  NodeId n = p.game.root;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (p.game.is_leaf(n)) {
      h.terminated = true;
      return h;
    }
    Choice c = p.choice_at(n);
    h.choices.push_back(c);
    n = p.chosen_edge(n).target;
  }
  h.terminated = p.game.is_leaf(n);
  return h;
}

}  // namespace regal
