#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "iewds/game_tree.hpp"

namespace iewds {

// Default bound on the number of joint strategies of a strategic form.
inline constexpr std::size_t kDefaultJointCap = 200'000;

// Total choice map of one player. choices[k] is the child position chosen at
// decision_nodes(player)[k]. Players that never move have the empty strategy.
struct Strategy {
  PlayerId player = 0;
  std::vector<std::uint32_t> choices;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// One base strategy index per player (slot i-1 for player i).
using JointIndex = std::vector<std::size_t>;

// Enumeration of a player's strategies. Strategy k is the mixed-radix number
// whose most significant digit is the first decision node in preorder, so the
// order is lexicographic over decision nodes and child positions.
class StrategySpace {
 public:
  // Throws CapExceeded when the number of strategies exceeds `cap`.
  StrategySpace(const GameTree& game, PlayerId player, std::size_t cap = kDefaultJointCap);

  PlayerId player() const { return player_; }
  std::size_t size() const { return size_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }

  // Child position chosen at decision node number k by strategy `index`.
  std::uint32_t digit(std::size_t index, std::size_t k) const {
    return static_cast<std::uint32_t>((index / weights_[k]) % radices_[k]);
  }
  std::size_t weight(std::size_t k) const { return weights_[k]; }
  std::uint32_t radix(std::size_t k) const { return radices_[k]; }

  Strategy decode(std::size_t index) const;
  std::size_t encode(const Strategy& s) const;

  // "v1->c1,v2->c2" using node labels; empty string for the empty function.
  std::string render(const GameTree& game, std::size_t index) const;
  std::optional<std::size_t> parse(const GameTree& game, std::string_view text) const;

 private:
  PlayerId player_;
  std::vector<NodeId> nodes_;
  std::vector<std::uint32_t> radices_;
  std::vector<std::size_t> weights_;
  std::size_t size_ = 1;
};

// All strategies of player i in the order of StrategySpace.
std::vector<Strategy> strategies(const GameTree& game, PlayerId i, std::size_t cap = kDefaultJointCap);

// Rooted path induced by a joint strategy; its last node is leaf(s).
std::vector<NodeId> play(const GameTree& game, std::span<const Strategy> joint);
NodeId leaf(const GameTree& game, std::span<const Strategy> joint);
const PayoffVector& payoff(const GameTree& game, std::span<const Strategy> joint);

// Gamma(G): the strategic form of an extensive game. The leaf reached by every
// joint strategy is tabulated at construction (the joint space is capped).
class StrategicGame {
 public:
  // Throws CapExceeded if the joint strategy count exceeds `cap`.
  StrategicGame(std::shared_ptr<const GameTree> game, std::size_t cap = kDefaultJointCap);

  const GameTree& tree() const { return *game_; }
  const std::shared_ptr<const GameTree>& tree_ptr() const { return game_; }
  int players() const { return game_->players(); }
  const StrategySpace& space(PlayerId i) const { return spaces_.at(static_cast<std::size_t>(i - 1)); }
  std::size_t strategy_count(PlayerId i) const { return space(i).size(); }
  std::size_t joint_count() const { return leaf_table_.size(); }

  std::size_t flat_index(std::span<const std::size_t> joint) const;
  JointIndex joint_at(std::size_t flat) const;
  NodeId leaf(std::span<const std::size_t> joint) const { return leaf_table_[flat_index(joint)]; }
  const PayoffVector& payoff(std::span<const std::size_t> joint) const { return game_->payoffs(leaf(joint)); }
  const Rational& payoff(std::span<const std::size_t> joint, PlayerId i) const {
    return payoff(joint)[static_cast<std::size_t>(i - 1)];
  }

  std::vector<Strategy> decode(std::span<const std::size_t> joint) const;
  std::string render(PlayerId i, std::size_t index) const { return space(i).render(*game_, index); }
  std::string render(std::span<const std::size_t> joint) const;

 private:
  std::shared_ptr<const GameTree> game_;
  std::vector<StrategySpace> spaces_;
  std::vector<std::size_t> flat_weights_;
  std::vector<NodeId> leaf_table_;
};

using StrategicGamePtr = std::shared_ptr<const StrategicGame>;

StrategicGamePtr to_strategic(const GameTree& game, std::size_t cap = kDefaultJointCap);
StrategicGamePtr to_strategic(std::shared_ptr<const GameTree> game, std::size_t cap = kDefaultJointCap);

// A subgame of a strategic game: per player, a sorted subset of base indices.
// The view is empty when some player keeps nothing.
class SubgameView {
 public:
  // The whole game.
  explicit SubgameView(StrategicGamePtr base);
  // Throws LookupError for indices outside the base lists. Sorts and dedups.
  SubgameView(StrategicGamePtr base, std::vector<std::vector<std::size_t>> kept);

  const StrategicGame& base() const { return *base_; }
  const StrategicGamePtr& base_ptr() const { return base_; }
  int players() const { return base_->players(); }

  const std::vector<std::size_t>& kept(PlayerId i) const { return kept_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<std::vector<std::size_t>>& kept_sets() const { return kept_; }
  bool contains(PlayerId i, std::size_t index) const;
  bool contains(std::span<const std::size_t> joint) const;
  bool empty() const;
  std::size_t joint_count() const;

  // Calls f(joint) for every kept joint strategy, player 1 most significant.
  template <typename F>
  void for_each_joint(F&& f) const {
    if (empty()) return;
    const std::size_t n = kept_.size();
    std::vector<std::size_t> pos(n, 0);
    JointIndex joint(n);
    for (std::size_t p = 0; p < n; ++p) joint[p] = kept_[p][0];
    while (true) {
      f(static_cast<const JointIndex&>(joint));
      std::size_t p = n;
      while (p > 0) {
        --p;
        if (++pos[p] < kept_[p].size()) {
          joint[p] = kept_[p][pos[p]];
          break;
        }
        pos[p] = 0;
        joint[p] = kept_[p][0];
        if (p == 0) return;
      }
      if (n == 0) return;
    }
  }

  // Calls f(joint) for every kept opponent profile of player i; slot i-1 of
  // `joint` is left at the first kept strategy of i and may be overwritten.
  template <typename F>
  void for_each_opponent_profile(PlayerId i, F&& f) const {
    if (empty()) return;
    const std::size_t me = static_cast<std::size_t>(i - 1);
    const std::size_t n = kept_.size();
    std::vector<std::size_t> pos(n, 0);
    JointIndex joint(n);
    for (std::size_t p = 0; p < n; ++p) joint[p] = kept_[p][0];
    while (true) {
      f(joint);
      std::size_t p = n;
      bool advanced = false;
      while (p > 0) {
        --p;
        if (p == me) continue;
        if (++pos[p] < kept_[p].size()) {
          joint[p] = kept_[p][pos[p]];
          advanced = true;
          break;
        }
        pos[p] = 0;
        joint[p] = kept_[p][0];
      }
      if (!advanced) return;
    }
  }

  friend bool operator==(const SubgameView& a, const SubgameView& b) {
    return a.base_ == b.base_ && a.kept_ == b.kept_;
  }

 private:
  StrategicGamePtr base_;
  std::vector<std::vector<std::size_t>> kept_;
};

// Distinct payoff vectors over the kept joint strategies.
std::set<PayoffVector> outcomes(const SubgameView& view);
// Throws PreconditionError on an empty view.
bool is_trivial(const SubgameView& view);

// Per-player intersection. Throws PreconditionError if the views do not share
// a base or the list is empty.
SubgameView intersect_views(std::span<const SubgameView> views);

// Gamma(G) as CSV: one row per player-1 strategy for two-player games, one row
// per joint strategy otherwise.
std::string to_csv(const StrategicGame& game);

}  // namespace iewds
