#include "regal/unfold.hpp"

#include "regal/errors.hpp"

#include <map>

namespace regal {

namespace {

int unfold_rec(const GameGraph& g, const std::vector<Choice>* choices, NodeId source,
               long long acc, int depth_left, UnfoldTree& tree) {
  const int index = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  UnfoldNode& node = tree.nodes.back();
  node.source = source;
  node.acc_delta = acc;
  if (g.is_leaf(source)) {
    node.is_leaf = true;
    node.payoffs = g.leaf(source).payoffs;
    return index;
  }
  const auto& in = g.internal(source);
  node.agent = in.agent;
  node.left_delta = in.left.delta;
  node.right_delta = in.right.delta;
  if (choices) node.choice = (*choices)[static_cast<size_t>(source)];
  if (depth_left == 0) {
    node.cut = true;
    return index;
  }
  const int left = unfold_rec(g, choices, in.left.target, acc + in.left.delta, depth_left - 1, tree);
  const int right = unfold_rec(g, choices, in.right.target, acc + in.right.delta, depth_left - 1, tree);
  tree.nodes[static_cast<size_t>(index)].left = left;
  tree.nodes[static_cast<size_t>(index)].right = right;
  return index;
}

}  // namespace

UnfoldTree unfold(const GameGraph& g, int depth) {
  if (depth < 0) throw ModelError("unfold depth must be >= 0");
  UnfoldTree tree;
  unfold_rec(g, nullptr, g.root, 0, depth, tree);
  return tree;
}

UnfoldTree unfold(const ProfileGraph& p, int depth) {
  if (depth < 0) throw ModelError("unfold depth must be >= 0");
  UnfoldTree tree;
  unfold_rec(p.game, &p.choices, p.game.root, 0, depth, tree);
  return tree;
}

namespace {

bool payoffs_match(const std::vector<AffineUtility>& a, const std::vector<std::string>& agents_a,
                   const std::vector<AffineUtility>& b, const std::vector<std::string>& agents_b) {
  if (agents_a.size() != agents_b.size()) return false;
  for (size_t i = 0; i < agents_a.size(); ++i) {
    size_t j = 0;
    while (j < agents_b.size() && agents_b[j] != agents_a[i]) ++j;
    if (j == agents_b.size()) return false;
    if (!(a[i] == b[j])) return false;
  }
  return true;
}

bool labels_match_rec(const UnfoldTree& a, const std::vector<std::string>& agents_a, int ia,
                      const UnfoldTree& b, const std::vector<std::string>& agents_b, int ib) {
  const UnfoldNode& na = a.nodes[static_cast<size_t>(ia)];
  const UnfoldNode& nb = b.nodes[static_cast<size_t>(ib)];
  if (na.is_leaf != nb.is_leaf || na.cut != nb.cut) return false;
  if (na.is_leaf) return payoffs_match(na.payoffs, agents_a, nb.payoffs, agents_b);
  if (agents_a[static_cast<size_t>(na.agent)] != agents_b[static_cast<size_t>(nb.agent)]) return false;
  if (na.choice.has_value() != nb.choice.has_value()) return false;
  if (na.choice && *na.choice != *nb.choice) return false;
  if (na.cut) return true;
  if (na.left_delta != nb.left_delta || na.right_delta != nb.right_delta) return false;
  return labels_match_rec(a, agents_a, na.left, b, agents_b, nb.left) &&
         labels_match_rec(a, agents_a, na.right, b, agents_b, nb.right);
}

bool truncation_rec(const UnfoldTree& small, int is, const UnfoldTree& big, int ib, int depth_left) {
  const UnfoldNode& ns = small.nodes[static_cast<size_t>(is)];
  const UnfoldNode& nb = big.nodes[static_cast<size_t>(ib)];
  if (ns.source != nb.source || ns.acc_delta != nb.acc_delta) return false;
  if (ns.is_leaf != nb.is_leaf) return false;
  if (ns.is_leaf) return ns.payoffs == nb.payoffs;
  if (depth_left == 0) return ns.cut;
  if (ns.cut || nb.cut) return false;
  return truncation_rec(small, ns.left, big, nb.left, depth_left - 1) &&
         truncation_rec(small, ns.right, big, nb.right, depth_left - 1);
}

}  // namespace

bool label_identical(const UnfoldTree& a, const std::vector<std::string>& agents_a,
                     const UnfoldTree& b, const std::vector<std::string>& agents_b) {
  return labels_match_rec(a, agents_a, a.root, b, agents_b, b.root);
}

bool is_truncation_of(const UnfoldTree& small, const UnfoldTree& big, int depth) {
  return truncation_rec(small, small.root, big, big.root, depth);
}

namespace {

// The leaf reached from `n` when every remaining agent stops, with the
// counter increments collected along the way.
std::pair<NodeId, long long> stop_path_leaf(const GameGraph& g, NodeId n) {
  long long acc = 0;
  int budget = g.node_count();
  while (!g.is_leaf(n)) {
    if (budget-- == 0)
      throw ModelError("cut replacement failed: the all-stop path from " + g.id(n) +
                       " never reaches a leaf");
    const Edge& e = g.internal(n).right;
    acc += e.delta;
    n = e.target;
  }
  return {n, acc};
}

}  // namespace

Truncation truncate_to_finite(const GameGraph& g, int depth) {
  const UnfoldTree tree = unfold(g, depth);
  Truncation out;
  out.tree.agents = g.agents;
  out.tree.preference = g.preference;
  out.tree.root = 0;
  // Recover positions from the preorder layout.
  std::vector<std::string> positions(tree.nodes.size());
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const UnfoldNode& un = tree.nodes[i];
    if (un.is_leaf || un.cut) continue;
    positions[static_cast<size_t>(un.left)] = positions[i] + 'l';
    positions[static_cast<size_t>(un.right)] = positions[i] + 'r';
  }
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const UnfoldNode& un = tree.nodes[i];
    out.source.push_back(un.source);
    out.position.push_back(positions[i]);
    out.tree.ids.push_back("@" + positions[i]);
    if (un.is_leaf) {
      LeafNode leaf;
      for (const auto& u : un.payoffs) leaf.payoffs.push_back(u.shifted(un.acc_delta));
      out.tree.nodes.emplace_back(std::move(leaf));
      out.acc_delta.push_back(un.acc_delta);
      out.from_cut.push_back(false);
    } else if (un.cut) {
      const auto [stop_leaf, stop_delta] = stop_path_leaf(g, un.source);
      LeafNode leaf;
      for (const auto& u : g.leaf(stop_leaf).payoffs)
        leaf.payoffs.push_back(u.shifted(un.acc_delta + stop_delta));
      out.tree.nodes.emplace_back(std::move(leaf));
      out.acc_delta.push_back(un.acc_delta + stop_delta);
      out.from_cut.push_back(true);
    } else {
      InternalNode in;
      in.agent = un.agent;
      in.left = Edge{un.left, 0};
      in.right = Edge{un.right, 0};
      out.tree.nodes.emplace_back(in);
      out.acc_delta.push_back(un.acc_delta);
      out.from_cut.push_back(false);
    }
  }
  return out;
}

}  // namespace regal
