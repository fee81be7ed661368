#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iewds/rational.hpp"

namespace iewds {

// Dense node index. Built trees store nodes in preorder, so the descendants of
// v are exactly the indices [v, subtree_end(v)). The root is always 0.
using NodeId = std::size_t;

// Players are numbered 1..n.
using PlayerId = int;

// Unvalidated description of a game, as read from EGT text or assembled by a
// generator. Node ids are free-form labels.
struct RawNode {
  std::string id;
  bool leaf = false;
  PlayerId turn = 0;
  std::vector<std::string> children;
  PayoffVector payoffs;
  std::size_t line = 0;  // source line, 0 when not parsed from text
};

struct GameDescription {
  int players = 0;
  std::vector<RawNode> nodes;
  std::string root;
};

struct Violation {
  enum class Kind {
    kBadPlayerCount,
    kMissingRoot,
    kDuplicateId,
    kDanglingChild,
    kEmptyChildren,
    kBadTurn,
    kPayoffArity,
    kMultipleParents,
    kRootHasParent,
    kCycle,
    kUnreachable,
  };
  Kind kind;
  std::string node;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind) const;
  std::string summary() const;
};

// Lists every violation of the tree invariants: player count, id uniqueness,
// child references, turn range, payoff arity, single parent, acyclicity and
// reachability from the root.
ValidationReport validate(const GameDescription& description);

// Finite extensive game with perfect information. Immutable once built.
class GameTree {
 public:
  // Throws ValidationError carrying the report summary if the description is
  // not a valid game tree.
  static GameTree build(const GameDescription& description);

  int players() const { return players_; }
  std::size_t size() const { return nodes_.size(); }
  NodeId root() const { return 0; }

  bool is_leaf(NodeId v) const { return node(v).turn == 0; }
  PlayerId turn(NodeId v) const { return node(v).turn; }
  std::span<const NodeId> children(NodeId v) const { return node(v).children; }
  const PayoffVector& payoffs(NodeId v) const { return node(v).payoffs; }
  const std::string& label(NodeId v) const { return node(v).label; }
  std::optional<NodeId> parent(NodeId v) const;
  NodeId subtree_end(NodeId v) const { return node(v).end; }
  bool in_subtree(NodeId root, NodeId v) const { return v >= root && v < subtree_end(root); }

  // Position of `child` among the children of its parent.
  std::size_t child_position(NodeId child) const { return node(child).position; }

  std::optional<NodeId> find(std::string_view label) const;
  NodeId at(std::string_view label) const;  // throws LookupError

  // Decision nodes of player i in preorder (V_i). Empty if i never moves.
  const std::vector<NodeId>& decision_nodes(PlayerId i) const;
  // Position of an internal node v within decision_nodes(turn(v)).
  std::size_t decision_index(NodeId v) const { return node(v).decision_index; }

  std::vector<NodeId> leaves() const;

  // Round-trips through build().
  GameDescription describe() const;

  friend bool operator==(const GameTree& a, const GameTree& b);

 private:
  struct Node {
    std::string label;
    PlayerId turn = 0;  // 0 marks a leaf
    std::vector<NodeId> children;
    PayoffVector payoffs;
    NodeId parent = 0;
    NodeId end = 0;
    std::size_t position = 0;
    std::size_t decision_index = 0;
  };

  const Node& node(NodeId v) const;
  void index();

  int players_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> decision_nodes_;  // slot i-1 for player i

  friend class SubtreeHandle;
};

// G^w: the subgame rooted at w. Keeps all players of the base game. Holds a
// reference; the base tree must outlive the handle.
class SubtreeHandle {
 public:
  SubtreeHandle(const GameTree& base, NodeId root);

  const GameTree& base() const { return *base_; }
  NodeId root() const { return root_; }
  std::size_t size() const { return base_->subtree_end(root_) - root_; }
  bool contains(NodeId v) const { return base_->in_subtree(root_, v); }
  std::vector<NodeId> leaves() const;

  // Standalone copy. Node k of the result is node root()+k of the base.
  GameTree materialize() const;

 private:
  const GameTree* base_;
  NodeId root_;
};

SubtreeHandle subgame(const GameTree& game, NodeId w);
SubtreeHandle subgame(const GameTree& game, std::string_view label);

// 0 for a single node, otherwise 1 + the largest rank among the children.
std::size_t rank(const SubtreeHandle& tree);
std::size_t rank(const GameTree& game);

}  // namespace iewds
