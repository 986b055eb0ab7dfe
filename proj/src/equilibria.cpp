#include "regal/equilibria.hpp"

#include "regal/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace regal {

namespace {

std::optional<AffineUtility> utility_through(const std::vector<UtilityResult>& table,
                                             const Edge& e, int agent) {
  const auto& u = table[static_cast<size_t>(e.target)].per_agent[static_cast<size_t>(agent)];
  if (!u) return std::nullopt;
  return u->shifted(e.delta);
}

}  // namespace

SgpeCertificate check_sgpe(const ProfileGraph& p, std::optional<long long> instance) {
  const GameGraph& g = p.game;
  const NodeSet altl = always_leads_to_leaf(p);
  const auto table = utilities_table(p);
  SgpeCertificate cert;
  cert.verdict = true;
  for (NodeId n : bfs_order(g, g.root)) {
    if (g.is_leaf(n)) continue;
    const auto& in = g.internal(n);
    SgpeNodeRecord rec;
    rec.node = n;
    rec.agent = in.agent;
    rec.chosen = p.choice_at(n);
    rec.altl = altl[static_cast<size_t>(n)];
    const Edge& chosen_edge = rec.chosen == Choice::Left ? in.left : in.right;
    const Edge& other_edge = rec.chosen == Choice::Left ? in.right : in.left;
    rec.chosen_utility = utility_through(table, chosen_edge, in.agent);
    rec.other_utility = utility_through(table, other_edge, in.agent);
    if (rec.chosen_utility && rec.other_utility) {
      if (instance) {
        rec.comparison_ok =
            leq_ut(rec.other_utility->eval(*instance), rec.chosen_utility->eval(*instance),
                   g.preference);
        if (!rec.comparison_ok) rec.fail_k = *instance;
      } else {
        const auto cmp =
            affine_compare_forall(*rec.other_utility, *rec.chosen_utility, g.preference, 0);
        rec.comparison_ok = cmp.holds;
        rec.fail_k = cmp.first_violation;
      }
    }
    const bool pass = rec.altl && rec.comparison_ok;
    if (!pass && cert.verdict) {
      cert.verdict = false;
      cert.offending_node = n;
      cert.reason = rec.altl ? SgpeFailure::ComparisonFails : SgpeFailure::NotAlwaysLeadsToLeaf;
      cert.fail_k = rec.altl ? rec.fail_k : std::nullopt;
    }
    cert.records.push_back(std::move(rec));
  }
  return cert;
}

namespace {

struct Candidate {
  AffineUtility utility;
  std::vector<DeviationChange> changes;
};

struct DeviationSearch {
  const ProfileGraph& p;
  int agent;
  std::optional<long long> instance;
  NodeSet ltl;
  std::vector<UtilityResult> table;

  // Keeps the undominated candidates; first-inserted wins ties, so the
  // fixed-choice play is preferred over deviations of equal value.
  void insert(std::vector<Candidate>& kept, Candidate cand) const {
    const Preference pref = p.game.preference;
    if (instance) {
      const Rational v = cand.utility.eval(*instance);
      if (kept.empty()) {
        kept.push_back(std::move(cand));
      } else if (!leq_ut(v, kept.front().utility.eval(*instance), pref)) {
        kept.front() = std::move(cand);
      }
      return;
    }
    for (const Candidate& k : kept)
      if (affine_better_forall(cand.utility, k.utility, pref, 0)) return;
    std::erase_if(kept, [&](const Candidate& k) {
      return affine_better_forall(k.utility, cand.utility, pref, 0);
    });
    kept.push_back(std::move(cand));
  }

  std::vector<Candidate> explore(NodeId node, int depth_left, long long acc,
                                 const std::string& path) const {
    const GameGraph& g = p.game;
    if (g.is_leaf(node)) {
      const auto& u = g.leaf(node).payoffs[static_cast<size_t>(agent)];
      return {Candidate{u.shifted(acc), {}}};
    }
    if (depth_left == 0) {
      // Beyond the horizon the profile plays unchanged; an undefined
      // continuation has no utility and never beats anything.
      if (!ltl[static_cast<size_t>(node)]) return {};
      const auto& u = table[static_cast<size_t>(node)].per_agent[static_cast<size_t>(agent)];
      return {Candidate{u->shifted(acc), {}}};
    }
    const auto& in = g.internal(node);
    const Choice fixed = p.choice_at(node);
    auto follow = [&](Choice c) {
      const Edge& e = c == Choice::Left ? in.left : in.right;
      return explore(e.target, depth_left - 1, acc + e.delta, path + choice_letter(c));
    };
    if (in.agent != agent) return follow(fixed);
    std::vector<Candidate> kept;
    for (Candidate& c : follow(fixed)) insert(kept, std::move(c));
    for (Candidate& c : follow(other(fixed))) {
      c.changes.insert(c.changes.begin(), DeviationChange{path, node, fixed, other(fixed)});
      insert(kept, std::move(c));
    }
    return kept;
  }
};

}  // namespace

std::optional<DeviationWitness> best_deviation(const ProfileGraph& p, int agent, int depth,
                                               std::optional<long long> instance) {
  if (depth < 1) throw ModelError("deviation search depth must be >= 1");
  if (agent < 0 || agent >= static_cast<int>(p.game.agents.size()))
    throw ModelError("unknown agent index");
  DeviationSearch search{p, agent, instance, leads_to_leaf(p), utilities_table(p)};
  if (!search.ltl[static_cast<size_t>(p.game.root)]) return std::nullopt;
  const AffineUtility original =
      *search.table[static_cast<size_t>(p.game.root)].per_agent[static_cast<size_t>(agent)];
  const auto candidates = search.explore(p.game.root, depth, 0, "");
  std::optional<DeviationWitness> best;
  const Preference pref = p.game.preference;
  for (const Candidate& c : candidates) {
    std::optional<long long> violation;
    if (instance) {
      if (!leq_ut(c.utility.eval(*instance), original.eval(*instance), pref))
        violation = *instance;
    } else {
      const auto cmp = affine_compare_forall(c.utility, original, pref, 0);
      if (!cmp.holds) violation = cmp.first_violation;
    }
    if (!violation) continue;
    if (!best || *violation < best->k_min)
      best = DeviationWitness{agent, c.changes, c.utility, original, *violation};
  }
  return best;
}

NashVerdict check_nash(const ProfileGraph& p, int depth, std::optional<long long> instance) {
  NashVerdict verdict;
  verdict.depth = depth;
  if (check_sgpe(p).verdict) {
    verdict.kind = NashVerdict::Kind::ImpliedBySgpe;
    return verdict;
  }
  for (int agent = 0; agent < static_cast<int>(p.game.agents.size()); ++agent) {
    if (auto witness = best_deviation(p, agent, depth, instance)) {
      verdict.kind = NashVerdict::Kind::Refuted;
      verdict.witness = std::move(witness);
      return verdict;
    }
  }
  verdict.kind = NashVerdict::Kind::NoCounterexampleUpToDepth;
  return verdict;
}

bool profile_leq(const ProfileGraph& p1, const ProfileGraph& p2, int agent,
                 std::optional<long long> instance) {
  if (p1.game.preference != p2.game.preference)
    throw ModelError("incomparable models: preferences differ");
  const auto u1 = utilities(p1, p1.game.root);
  const auto u2 = utilities(p2, p2.game.root);
  if (!u1.defined() || !u2.defined())
    throw ModelError("profile order is defined only for profiles that lead to a leaf");
  const auto& a1 = *u1.per_agent[static_cast<size_t>(agent)];
  const auto& a2 = *u2.per_agent[static_cast<size_t>(agent)];
  if (instance) return leq_ut(a1.eval(*instance), a2.eval(*instance), p1.game.preference);
  return affine_better_forall(a1, a2, p1.game.preference, 0);
}

namespace {

struct ProductGraph {
  std::map<std::pair<NodeId, NodeId>, int> index;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<std::vector<int>> succ;
  std::vector<bool> differing;  // choices differ at this pair
};

// Strongly connected components (iterative Tarjan); returns per-node flag
// "lies on a cycle" (component of size > 1, or a self-loop).
std::vector<bool> on_cycle(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<int> comp_size;
  int counter = 0;
  struct Frame {
    int node;
    size_t edge;
  };
  for (int start = 0; start < n; ++start) {
    if (idx[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    idx[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < succ[static_cast<size_t>(f.node)].size()) {
        const int next = succ[static_cast<size_t>(f.node)][f.edge++];
        if (idx[next] == -1) {
          idx[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.push_back({next, 0});
        } else if (on_stack[next]) {
          low[f.node] = std::min(low[f.node], idx[next]);
        }
      } else {
        if (low[f.node] == idx[f.node]) {
          const int c = static_cast<int>(comp_size.size());
          int size = 0;
          for (;;) {
            const int v = stack.back();
            stack.pop_back();
            on_stack[v] = false;
            comp[v] = c;
            ++size;
            if (v == f.node) break;
          }
          comp_size.push_back(size);
        }
        const int done = f.node;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[done]);
      }
    }
  }
  std::vector<bool> result(n, false);
  for (int v = 0; v < n; ++v) {
    if (comp_size[static_cast<size_t>(comp[v])] > 1) result[v] = true;
    for (int s : succ[static_cast<size_t>(v)])
      if (s == v) result[v] = true;
  }
  return result;
}

}  // namespace

Convertibility convertible(const ProfileGraph& p1, const ProfileGraph& p2, int agent) {
  const GameGraph& a = p1.game;
  const GameGraph& b = p2.game;
  if (a.preference != b.preference) return {false, "preferences differ"};
  if (a.agents.size() != b.agents.size()) return {false, "agent sets differ"};
  std::vector<int> amap(a.agents.size());
  for (size_t i = 0; i < a.agents.size(); ++i) {
    auto j = b.find_agent(a.agents[i]);
    if (!j) return {false, "agent sets differ"};
    amap[i] = *j;
  }

  ProductGraph prod;
  auto intern = [&](NodeId na, NodeId nb) {
    auto [it, fresh] = prod.index.try_emplace({na, nb}, static_cast<int>(prod.pairs.size()));
    if (fresh) {
      prod.pairs.push_back({na, nb});
      prod.succ.emplace_back();
      prod.differing.push_back(false);
    }
    return std::pair{it->second, fresh};
  };
  std::vector<int> work{intern(a.root, b.root).first};
  while (!work.empty()) {
    const int i = work.back();
    work.pop_back();
    const auto [na, nb] = prod.pairs[static_cast<size_t>(i)];
    const std::string where = a.id(na) + "/" + b.id(nb);
    if (a.is_leaf(na) != b.is_leaf(nb)) return {false, "shapes differ at " + where};
    if (a.is_leaf(na)) {
      const auto& pa = a.leaf(na).payoffs;
      const auto& pb = b.leaf(nb).payoffs;
      for (size_t x = 0; x < pa.size(); ++x)
        if (!(pa[x] == pb[static_cast<size_t>(amap[x])]))
          return {false, "leaf payoffs differ at " + where};
      continue;
    }
    const auto& ia = a.internal(na);
    const auto& ib = b.internal(nb);
    if (amap[static_cast<size_t>(ia.agent)] != ib.agent)
      return {false, "deciding agents differ at " + where};
    if (ia.left.delta != ib.left.delta || ia.right.delta != ib.right.delta)
      return {false, "edge deltas differ at " + where};
    const bool differs = p1.choice_at(na) != p2.choice_at(nb);
    if (differs && ia.agent != agent)
      return {false, "choices of agent " + a.agents[static_cast<size_t>(ia.agent)] +
                         " differ at " + where + ", but only " +
                         a.agents[static_cast<size_t>(agent)] + " may deviate"};
    prod.differing[static_cast<size_t>(i)] = differs;
    for (auto [ta, tb] : {std::pair{ia.left.target, ib.left.target},
                          std::pair{ia.right.target, ib.right.target}}) {
      auto [j, fresh] = intern(ta, tb);
      prod.succ[static_cast<size_t>(i)].push_back(j);
      if (fresh) work.push_back(j);
    }
  }

  // A differing choice is a single conversion step; it must happen at only
  // finitely many positions of the unfolding, i.e. the product state must
  // not lie on or behind a cycle.
  const auto cyc = on_cycle(prod.succ);
  std::vector<bool> behind_cycle(prod.pairs.size(), false);
  std::vector<int> queue;
  for (size_t i = 0; i < prod.pairs.size(); ++i) {
    if (cyc[i]) {
      behind_cycle[i] = true;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    const int i = queue.back();
    queue.pop_back();
    for (int s : prod.succ[static_cast<size_t>(i)]) {
      if (!behind_cycle[static_cast<size_t>(s)]) {
        behind_cycle[static_cast<size_t>(s)] = true;
        queue.push_back(s);
      }
    }
  }
  for (size_t i = 0; i < prod.pairs.size(); ++i) {
    if (prod.differing[i] && behind_cycle[i]) {
      const auto [na, nb] = prod.pairs[i];
      return {false, "the differing choice at " + a.id(na) + "/" + b.id(nb) +
                         " recurs at infinitely many positions of the unfolding"};
    }
  }
  return {true, ""};
}

namespace {

struct BiSolution {
  std::map<NodeId, Choice> choices;
  std::vector<AffineUtility> values;
};

struct BackwardInduction {
  const GameGraph& g;
  std::size_t cap;

  std::vector<BiSolution> solve(NodeId n) const {
    if (g.is_leaf(n)) return {BiSolution{{}, g.leaf(n).payoffs}};
    const auto& in = g.internal(n);
    const auto left = solve(in.left.target);
    const auto right = solve(in.right.target);
    std::vector<BiSolution> out;
    for (const auto& ls : left) {
      for (const auto& rs : right) {
        std::vector<AffineUtility> lv, rv;
        for (const auto& u : ls.values) lv.push_back(u.shifted(in.left.delta));
        for (const auto& u : rs.values) rv.push_back(u.shifted(in.right.delta));
        const auto& la = lv[static_cast<size_t>(in.agent)];
        const auto& ra = rv[static_cast<size_t>(in.agent)];
        for (Choice c : {Choice::Left, Choice::Right}) {
          const auto& chosen = c == Choice::Left ? la : ra;
          const auto& other_side = c == Choice::Left ? ra : la;
          if (!affine_better_forall(other_side, chosen, g.preference, 0)) continue;
          BiSolution sol;
          sol.choices = ls.choices;
          sol.choices.insert(rs.choices.begin(), rs.choices.end());
          sol.choices[n] = c;
          sol.values = c == Choice::Left ? lv : rv;
          out.push_back(std::move(sol));
          if (out.size() > cap)
            throw EnumerationCapExceeded("backward induction exceeded the solution cap of " +
                                         std::to_string(cap));
        }
      }
    }
    return out;
  }
};

}  // namespace

std::vector<ProfileGraph> backward_induction(const GameGraph& tree, std::size_t cap) {
  // Reject cycles and shared subtrees: within the reachable part every node
  // must have at most one parent.
  const auto reach = reachable_from(tree, tree.root);
  std::vector<int> parents(tree.nodes.size(), 0);
  for (NodeId n = 0; n < tree.node_count(); ++n) {
    if (!reach[static_cast<size_t>(n)] || tree.is_leaf(n)) continue;
    const auto& in = tree.internal(n);
    ++parents[static_cast<size_t>(in.left.target)];
    ++parents[static_cast<size_t>(in.right.target)];
  }
  if (parents[static_cast<size_t>(tree.root)] > 0)
    throw ModelError("backward induction requires an acyclic game");
  for (NodeId n = 0; n < tree.node_count(); ++n)
    if (n != tree.root && parents[static_cast<size_t>(n)] > 1)
      throw ModelError("backward induction requires a tree-shaped game");
  // A deeper cycle would make the recursion diverge; detect it up front with
  // a depth-first search.
  {
    enum class Color { White, Gray, Black };
    std::vector<Color> color(tree.nodes.size(), Color::White);
    struct Frame {
      NodeId node;
      int edge;
    };
    std::vector<Frame> frames{{tree.root, 0}};
    color[static_cast<size_t>(tree.root)] = Color::Gray;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (tree.is_leaf(f.node) || f.edge == 2) {
        color[static_cast<size_t>(f.node)] = Color::Black;
        frames.pop_back();
        continue;
      }
      const auto& in = tree.internal(f.node);
      const NodeId next = f.edge == 0 ? in.left.target : in.right.target;
      ++f.edge;
      if (color[static_cast<size_t>(next)] == Color::Gray)
        throw ModelError("backward induction requires an acyclic game");
      if (color[static_cast<size_t>(next)] == Color::White) {
        color[static_cast<size_t>(next)] = Color::Gray;
        frames.push_back({next, 0});
      }
    }
  }

  BackwardInduction bi{tree, cap};
  const auto solutions = bi.solve(tree.root);
  std::vector<ProfileGraph> out;
  for (const auto& sol : solutions) {
    std::vector<Choice> choices(tree.nodes.size(), Choice::Left);
    for (const auto& [node, c] : sol.choices) choices[static_cast<size_t>(node)] = c;
    out.push_back(with_choices(tree, choices));
  }
  return out;
}

}  // namespace regal
