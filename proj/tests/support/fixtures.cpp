#include "fixtures.hpp"

#include <algorithm>
#include <set>

namespace fixtures {

using iewds::GameTree;
using iewds::PayoffVector;
using iewds::Rational;

GameTree random(std::uint64_t seed, iewds::PayoffMode mode, int players, int depth, int branching,
                std::size_t max_joint) {
  iewds::FamilySpec spec;
  spec.mode = mode;
  spec.players = players;
  spec.depth = depth;
  spec.branching = branching;
  spec.seed = seed;
  spec.max_joint = max_joint;
  return iewds::random_game(spec);
}

GameTree map_payoffs(const GameTree& game, const std::function<PayoffVector(const PayoffVector&)>& f) {
  auto desc = game.describe();
  for (auto& n : desc.nodes) {
    if (n.leaf) n.payoffs = f(n.payoffs);
  }
  return GameTree::build(desc);
}

GameTree strictly_competitive(std::uint64_t seed, int depth, std::size_t max_joint) {
  GameTree g = random(seed, iewds::PayoffMode::kZeroSum, 2, depth, 3, max_joint);
  if (seed % 2 == 0) return g;
  return map_payoffs(g, [](const PayoffVector& p) {
    const Rational x = p[0];
    return PayoffVector{x, -(x * x * x) - 2 * x + Rational(1, 3)};
  });
}

GameTree two_outcome(std::uint64_t seed, int depth, std::size_t max_joint) {
  GameTree g = random(seed, iewds::PayoffMode::kZeroSum, 2, depth, 3, max_joint);
  return map_payoffs(g, [](const PayoffVector& p) {
    const Rational x = p[0] >= Rational(0) ? 1 : 0;
    return PayoffVector{x, -x};
  });
}

iewds::SubgameView closed_view(const iewds::StrategicGamePtr& game, iewds::NodeId w, const iewds::StepSets& seeds) {
  const GameTree& tree = game->tree();
  std::vector<std::vector<std::size_t>> kept(seeds.size());
  for (iewds::PlayerId j = 1; j <= game->players(); ++j) {
    const auto& space = game->space(j);
    auto key = [&](std::size_t s) {
      std::vector<std::uint32_t> k;
      for (std::size_t d = 0; d < space.nodes().size(); ++d) {
        const iewds::NodeId v = space.nodes()[d];
        if (tree.in_subtree(w, v) || v == tree.root()) continue;
        k.push_back(space.digit(s, d));
      }
      return k;
    };
    std::set<std::vector<std::uint32_t>> keys;
    for (std::size_t s : seeds[static_cast<std::size_t>(j - 1)]) keys.insert(key(s));
    for (std::size_t s = 0; s < space.size(); ++s) {
      if (keys.count(key(s))) kept[static_cast<std::size_t>(j - 1)].push_back(s);
    }
  }
  return iewds::SubgameView(game, kept);
}

iewds::SubgameView minus(const iewds::SubgameView& view, const iewds::StepSets& sets) {
  auto kept = view.kept_sets();
  for (std::size_t p = 0; p < kept.size(); ++p) {
    std::erase_if(kept[p], [&](std::size_t s) { return std::find(sets[p].begin(), sets[p].end(), s) != sets[p].end(); });
  }
  return iewds::SubgameView(view.base_ptr(), kept);
}

}  // namespace fixtures
