#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "iewds/strategic.hpp"

namespace iewds {

// Player `player` is indifferent between r and t against the opponents in
// `profile` (whose own slot holds r) but the outcome vectors differ.
struct TdiWitness {
  PlayerId player = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  JointIndex profile;
  PayoffVector outcome_r;
  PayoffVector outcome_t;
};

struct TdiResult {
  bool holds = true;
  std::optional<TdiWitness> witness;
};

// Transference of decisionmaker indifference over the kept strategies of the
// view (the whole Gamma(G) by default).
TdiResult is_tdi(const SubgameView& view);
TdiResult is_tdi(const GameTree& game, std::size_t cap = kDefaultJointCap);

// Two joint strategies where one player's order is not the reverse of the
// other's.
struct CompetitiveResult {
  bool holds = true;
  std::optional<std::pair<JointIndex, JointIndex>> witness;
};

// Two-player only (PreconditionError otherwise).
CompetitiveResult is_strictly_competitive(const SubgameView& view);
CompetitiveResult is_strictly_competitive(const GameTree& game, std::size_t cap = kDefaultJointCap);

// Leaf-level predicates. The witness lists the offending nodes: a leaf for
// zero-sum, two leaves for generic, and the internal node followed by two
// leaves for without-relevant-ties.
struct LeafCheck {
  bool holds = true;
  std::vector<NodeId> witness;
  PlayerId player = 0;  // coordinate that failed, when applicable
};

LeafCheck is_zero_sum(const GameTree& game);
LeafCheck is_generic(const GameTree& game);
LeafCheck is_without_relevant_ties(const GameTree& game);

struct ClassReport {
  TdiResult tdi;
  std::optional<CompetitiveResult> strictly_competitive;  // absent unless two players
  LeafCheck zero_sum;
  LeafCheck generic;
  LeafCheck without_relevant_ties;
};

ClassReport classify(const GameTree& game, std::size_t cap = kDefaultJointCap);

// Quantities on two-player views. All throw PreconditionError on an empty view
// or a player count other than two.
Rational p_max(const SubgameView& view, PlayerId i);
// Strategies of i that earn p_max(view, i) against every opponent strategy.
std::vector<std::size_t> win_set(const SubgameView& view, PlayerId i);
// Strategies of i's opponent against which some strategy of i earns
// p_max(view, i), i.e. lose_{-i}.
std::vector<std::size_t> lose_set(const SubgameView& view, PlayerId i);

// Pure-strategy max-min value of player i. Works for any player count.
Rational maxmin(const SubgameView& view, PlayerId i);
std::vector<std::size_t> security_strategies(const SubgameView& view, PlayerId i);

}  // namespace iewds
