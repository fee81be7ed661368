#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "iewds/strategic.hpp"

namespace iewds {

// Pure Nash equilibria of the view by unilateral-deviation scan. Throws
// CapExceeded when the view has more than `cap` joint strategies.
std::vector<JointIndex> nash_equilibria(const SubgameView& view, std::size_t cap = kDefaultJointCap);

// s restricted to every subtree G^w is a Nash equilibrium of G^w. Each subtree
// check compares the player's payoff with the best payoff they can reach from w
// against the others' fixed choices.
bool is_spe(const GameTree& game, std::span<const Strategy> joint);

// All subgame perfect equilibria, as base joint indices of Gamma(G), in
// increasing flat order.
std::vector<JointIndex> spe_enumerate(const StrategicGame& game);

// A subgame perfect equilibrium: at each decision node, reachable or not, the
// mover takes the first child (in stored order) maximising their continuation
// payoff.
std::vector<Strategy> backward_induction(const GameTree& game);

struct SpeNodeSummary {
  bool exists = true;
  bool invariant = false;
  std::optional<PayoffVector> unique_payoff;  // present iff invariant
};

struct SpeSummary {
  std::vector<SpeNodeSummary> nodes;  // indexed by NodeId

  const SpeNodeSummary& root() const { return nodes.front(); }
  bool invariant() const { return root().invariant; }
};

// Bottom-up: a leaf is invariant with its own payoff. An internal node is
// invariant iff all children are and the children maximising the mover's
// payoff all carry the same payoff vector.
SpeSummary spe_invariance(const GameTree& game);

}  // namespace iewds
