#include "iewds/game_tree.hpp"

#include <algorithm>
#include <unordered_map>

#include "iewds/errors.hpp"

namespace iewds {

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

ValidationReport validate(const GameDescription& d) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, const std::string& node, std::string message) {
    report.violations.push_back({kind, node, std::move(message)});
  };

  if (d.players < 1) {
    add(Violation::Kind::kBadPlayerCount, "", "player count must be at least 1, got " + std::to_string(d.players));
  }

  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t k = 0; k < d.nodes.size(); ++k) {
    if (!by_id.emplace(d.nodes[k].id, k).second) {
      add(Violation::Kind::kDuplicateId, d.nodes[k].id, "duplicate node id '" + d.nodes[k].id + "'");
    }
  }

  std::vector<std::size_t> parents(d.nodes.size(), 0);
  for (const auto& n : d.nodes) {
    if (n.leaf) {
      if (d.players >= 1 && n.payoffs.size() != static_cast<std::size_t>(d.players)) {
        add(Violation::Kind::kPayoffArity, n.id,
            "leaf '" + n.id + "' has " + std::to_string(n.payoffs.size()) + " payoffs, expected " +
                std::to_string(d.players));
      }
      continue;
    }
    if (n.turn < 1 || n.turn > d.players) {
      add(Violation::Kind::kBadTurn, n.id,
          "node '" + n.id + "' has turn " + std::to_string(n.turn) + " outside 1.." + std::to_string(d.players));
    }
    if (n.children.empty()) {
      add(Violation::Kind::kEmptyChildren, n.id, "internal node '" + n.id + "' has no children");
    }
    for (const auto& c : n.children) {
      auto it = by_id.find(c);
      if (it == by_id.end()) {
        add(Violation::Kind::kDanglingChild, n.id, "node '" + n.id + "' references missing child '" + c + "'");
        continue;
      }
      if (++parents[it->second] == 2) {
        add(Violation::Kind::kMultipleParents, c, "node '" + c + "' has more than one parent (not a tree)");
      }
    }
  }

  auto root_it = by_id.find(d.root);
  if (d.root.empty() || root_it == by_id.end()) {
    add(Violation::Kind::kMissingRoot, d.root, "root '" + d.root + "' is not a declared node");
  } else if (parents[root_it->second] > 0) {
    add(Violation::Kind::kRootHasParent, d.root, "root '" + d.root + "' is the child of another node");
  }

  // Cycle detection over the child relation (three-colour DFS from every node).
  enum : unsigned char { kWhite, kGrey, kBlack };
  std::vector<unsigned char> colour(d.nodes.size(), kWhite);
  std::vector<std::size_t> first_index(d.nodes.size());
  for (std::size_t k = 0; k < d.nodes.size(); ++k) first_index[k] = by_id.at(d.nodes[k].id);
  auto child_index = [&](const std::string& c) -> std::optional<std::size_t> {
    auto it = by_id.find(c);
    if (it == by_id.end()) return std::nullopt;
    return it->second;
  };
  bool cycle_reported = false;
  for (std::size_t start = 0; start < d.nodes.size() && !cycle_reported; ++start) {
    if (colour[start] != kWhite || first_index[start] != start) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    colour[start] = kGrey;
    while (!stack.empty() && !cycle_reported) {
      auto& [v, next] = stack.back();
      static const std::vector<std::string> kNone;
      const auto& kids = d.nodes[v].leaf ? kNone : d.nodes[v].children;
      if (next == kids.size()) {
        colour[v] = kBlack;
        stack.pop_back();
        continue;
      }
      auto c = child_index(kids[next++]);
      if (!c) continue;
      if (colour[*c] == kGrey) {
        add(Violation::Kind::kCycle, d.nodes[*c].id, "cycle detected through node '" + d.nodes[*c].id + "'");
        cycle_reported = true;
      } else if (colour[*c] == kWhite) {
        colour[*c] = kGrey;
        stack.emplace_back(*c, 0);
      }
    }
  }

  if (root_it != by_id.end() && !d.root.empty()) {
    std::vector<bool> seen(d.nodes.size(), false);
    std::vector<std::size_t> stack{root_it->second};
    seen[root_it->second] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (d.nodes[v].leaf) continue;
      for (const auto& c : d.nodes[v].children) {
        auto ci = child_index(c);
        if (ci && !seen[*ci]) {
          seen[*ci] = true;
          stack.push_back(*ci);
        }
      }
    }
    for (std::size_t k = 0; k < d.nodes.size(); ++k) {
      if (!seen[k] && first_index[k] == k) {
        add(Violation::Kind::kUnreachable, d.nodes[k].id, "node '" + d.nodes[k].id + "' is unreachable from the root");
      }
    }
  }
  return report;
}

GameTree GameTree::build(const GameDescription& d) {
  const ValidationReport report = validate(d);
  if (!report.ok()) throw ValidationError(report.summary());

  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t k = 0; k < d.nodes.size(); ++k) by_id.emplace(d.nodes[k].id, k);

  GameTree tree;
  tree.players_ = d.players;
  tree.nodes_.reserve(d.nodes.size());

  // Preorder renumbering. Each stack entry is (raw index, parent id, position).
  struct Pending {
    std::size_t raw;
    NodeId parent;
    std::size_t position;
  };
  std::vector<Pending> stack{{by_id.at(d.root), 0, 0}};
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    const RawNode& raw = d.nodes[p.raw];
    const NodeId id = tree.nodes_.size();
    Node n;
    n.label = raw.id;
    n.turn = raw.leaf ? 0 : raw.turn;
    n.payoffs = raw.leaf ? raw.payoffs : PayoffVector{};
    n.parent = p.parent;
    n.position = p.position;
    tree.nodes_.push_back(std::move(n));
    if (id != 0) tree.nodes_[p.parent].children.push_back(id);
    if (!raw.leaf) {
      for (std::size_t k = raw.children.size(); k-- > 0;) {
        stack.push_back({by_id.at(raw.children[k]), id, k});
      }
    }
  }
  tree.index();
  return tree;
}

void GameTree::index() {
  decision_nodes_.assign(static_cast<std::size_t>(players_), {});
  for (NodeId v = nodes_.size(); v-- > 0;) {
    Node& n = nodes_[v];
    n.end = n.children.empty() ? v + 1 : nodes_[n.children.back()].end;
  }
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    Node& n = nodes_[v];
    if (n.turn == 0) continue;
    auto& list = decision_nodes_[static_cast<std::size_t>(n.turn - 1)];
    n.decision_index = list.size();
    list.push_back(v);
  }
}

const GameTree::Node& GameTree::node(NodeId v) const {
  if (v >= nodes_.size()) throw LookupError("unknown node index " + std::to_string(v));
  return nodes_[v];
}

std::optional<NodeId> GameTree::parent(NodeId v) const {
  if (v == 0) {
    node(v);
    return std::nullopt;
  }
  return node(v).parent;
}

std::optional<NodeId> GameTree::find(std::string_view label) const {
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].label == label) return v;
  }
  return std::nullopt;
}

NodeId GameTree::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw LookupError("unknown node id '" + std::string(label) + "'");
  return *v;
}

const std::vector<NodeId>& GameTree::decision_nodes(PlayerId i) const {
  if (i < 1 || i > players_) throw LookupError("unknown player " + std::to_string(i));
  return decision_nodes_[static_cast<std::size_t>(i - 1)];
}

std::vector<NodeId> GameTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].turn == 0) out.push_back(v);
  }
  return out;
}

GameDescription GameTree::describe() const {
  GameDescription d;
  d.players = players_;
  d.root = nodes_.front().label;
  for (const Node& n : nodes_) {
    RawNode raw;
    raw.id = n.label;
    raw.leaf = n.turn == 0;
    raw.turn = n.turn;
    raw.payoffs = n.payoffs;
    for (NodeId c : n.children) raw.children.push_back(nodes_[c].label);
    d.nodes.push_back(std::move(raw));
  }
  return d;
}

bool operator==(const GameTree& a, const GameTree& b) {
  if (a.players_ != b.players_ || a.nodes_.size() != b.nodes_.size()) return false;
  for (NodeId v = 0; v < a.nodes_.size(); ++v) {
    const auto& x = a.nodes_[v];
    const auto& y = b.nodes_[v];
    if (x.label != y.label || x.turn != y.turn || x.children != y.children || x.payoffs != y.payoffs) return false;
  }
  return true;
}

SubtreeHandle::SubtreeHandle(const GameTree& base, NodeId root) : base_(&base), root_(root) {
  if (root >= base.size()) throw LookupError("unknown node index " + std::to_string(root));
}

std::vector<NodeId> SubtreeHandle::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = root_; v < base_->subtree_end(root_); ++v) {
    if (base_->is_leaf(v)) out.push_back(v);
  }
  return out;
}

GameTree SubtreeHandle::materialize() const {
  GameTree out;
  out.players_ = base_->players_;
  const NodeId end = base_->subtree_end(root_);
  out.nodes_.reserve(end - root_);
  for (NodeId v = root_; v < end; ++v) {
    GameTree::Node n = base_->nodes_[v];
    for (NodeId& c : n.children) c -= root_;
    n.parent = v == root_ ? 0 : n.parent - root_;
    if (v == root_) n.position = 0;
    out.nodes_.push_back(std::move(n));
  }
  out.index();
  return out;
}

SubtreeHandle subgame(const GameTree& game, NodeId w) { return SubtreeHandle(game, w); }

SubtreeHandle subgame(const GameTree& game, std::string_view label) { return SubtreeHandle(game, game.at(label)); }

std::size_t rank(const SubtreeHandle& tree) {
  const GameTree& g = tree.base();
  const NodeId end = g.subtree_end(tree.root());
  std::vector<std::size_t> r(end - tree.root(), 0);
  for (NodeId v = end; v-- > tree.root();) {
    for (NodeId c : g.children(v)) r[v - tree.root()] = std::max(r[v - tree.root()], r[c - tree.root()] + 1);
  }
  return r.front();
}

std::size_t rank(const GameTree& game) { return rank(SubtreeHandle(game, game.root())); }

}  // namespace iewds
