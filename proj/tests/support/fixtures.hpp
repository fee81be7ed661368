#pragma once

#include <cstdint>
#include <functional>

#include "iewds/game_tree.hpp"
#include "iewds/elimination.hpp"
#include "iewds/generators.hpp"
#include "iewds/strategic.hpp"

namespace fixtures {

// Random game from the library generator with small defaults.
iewds::GameTree random(std::uint64_t seed, iewds::PayoffMode mode, int players = 2, int depth = 3, int branching = 3,
                       std::size_t max_joint = 64);

// Same tree, payoffs replaced leaf by leaf.
iewds::GameTree map_payoffs(const iewds::GameTree& game,
                            const std::function<iewds::PayoffVector(const iewds::PayoffVector&)>& f);

// Two-player strictly competitive game. Even seeds are zero-sum; odd seeds
// replace p2 with a strictly decreasing, non-linear function of p1.
iewds::GameTree strictly_competitive(std::uint64_t seed, int depth = 3, std::size_t max_joint = 64);

// Strictly competitive game whose leaves carry at most two outcomes.
iewds::GameTree two_outcome(std::uint64_t seed, int depth = 3, std::size_t max_joint = 64);

// Smallest view containing `seeds` that is closed, for every player, under
// changes at the decision nodes inside G^w and at the root. Such a view does
// not depend on G^w.
iewds::SubgameView closed_view(const iewds::StrategicGamePtr& game, iewds::NodeId w, const iewds::StepSets& seeds);

// The view with the named strategies taken out.
iewds::SubgameView minus(const iewds::SubgameView& view, const iewds::StepSets& sets);

}  // namespace fixtures
