#pragma once

#include "regal/game.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regal {

struct UnfoldNode {
  NodeId source = -1;       // node of the original graph
  long long acc_delta = 0;  // counter offset accumulated from the root
  bool is_leaf = false;
  bool cut = false;  // internal node at the depth frontier
  // leaf payload
  std::vector<AffineUtility> payoffs;
  // internal payload (also set on cut nodes)
  int agent = -1;
  int left = -1;   // child index, -1 when cut or leaf
  int right = -1;
  long long left_delta = 0;
  long long right_delta = 0;
  std::optional<Choice> choice;  // present when unfolding a profile
};

// Depth-bounded tree unfolding; nodes stored in preorder, root at index 0.
struct UnfoldTree {
  std::vector<UnfoldNode> nodes;
  int root = 0;
};

UnfoldTree unfold(const GameGraph& g, int depth);
UnfoldTree unfold(const ProfileGraph& p, int depth);

// Structural equality of two unfoldings, aligning agents by name. Compares
// node kind (leaf / internal / cut), agents, edge deltas, per-agent leaf
// coefficients and, when present on both sides, choices.
bool label_identical(const UnfoldTree& a, const std::vector<std::string>& agents_a,
                     const UnfoldTree& b, const std::vector<std::string>& agents_b);

// `small` equals the depth-`depth` truncation of `big`.
bool is_truncation_of(const UnfoldTree& small, const UnfoldTree& big, int depth);

// A finite acyclic game produced by cutting a cyclic one: unfold to `depth`,
// fold accumulated deltas into the leaf payoffs (so edge deltas become 0),
// and replace every cut node by the leaf it reaches when everyone stops
// (follows Right edges; fails if that path does not reach a leaf).
struct Truncation {
  GameGraph tree;
  std::vector<NodeId> source;        // per tree node
  std::vector<long long> acc_delta;  // per tree node
  std::vector<std::string> position;  // choice string from the root
  std::vector<bool> from_cut;        // leaf obtained by cut replacement
};

Truncation truncate_to_finite(const GameGraph& g, int depth);

}  // namespace regal
