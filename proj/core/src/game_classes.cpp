#include "iewds/game_classes.hpp"

#include <algorithm>
#include <map>

#include "iewds/dominance.hpp"
#include "iewds/errors.hpp"

namespace iewds {
namespace {

void require_two_players(const SubgameView& view, const char* what) {
  if (view.players() != 2) throw PreconditionError(std::string(what) + " needs a two-player game");
  if (view.empty()) throw PreconditionError(std::string(what) + " is undefined on an empty view");
}

PlayerId other(PlayerId i) { return i == 1 ? 2 : 1; }

}  // namespace

TdiResult is_tdi(const SubgameView& view) {
  TdiResult result;
  if (view.empty()) return result;
  const StrategicGame& g = view.base();
  for (PlayerId i = 1; i <= view.players(); ++i) {
    const auto slot = static_cast<std::size_t>(i - 1);
    bool done = false;
    view.for_each_opponent_profile(i, [&](const JointIndex& profile) {
      if (done) return;
      JointIndex j = profile;
      // First strategy seen for each payoff value of player i.
      std::map<Rational, std::pair<std::size_t, NodeId>> first;
      for (std::size_t r : view.kept(i)) {
        j[slot] = r;
        const NodeId leaf = g.leaf(j);
        const Rational& value = g.tree().payoffs(leaf)[slot];
        auto [it, inserted] = first.emplace(value, std::make_pair(r, leaf));
        if (inserted) continue;
        const PayoffVector& a = g.tree().payoffs(it->second.second);
        const PayoffVector& b = g.tree().payoffs(leaf);
        if (a != b) {
          result.holds = false;
          JointIndex at = profile;
          at[slot] = it->second.first;
          result.witness = TdiWitness{i, it->second.first, r, std::move(at), a, b};
          done = true;
          return;
        }
      }
    });
    if (done) break;
  }
  return result;
}

TdiResult is_tdi(const GameTree& game, std::size_t cap) { return is_tdi(SubgameView(to_strategic(game, cap))); }

CompetitiveResult is_strictly_competitive(const SubgameView& view) {
  require_two_players(view, "strict competitiveness");
  std::map<PayoffVector, JointIndex> realised;
  view.for_each_joint([&](const JointIndex& j) { realised.emplace(view.base().payoff(j), j); });
  CompetitiveResult result;
  for (const auto& [a, ja] : realised) {
    for (const auto& [b, jb] : realised) {
      const bool left = a[0] >= b[0];
      const bool right = a[1] <= b[1];
      if (left != right) {
        result.holds = false;
        result.witness = std::make_pair(ja, jb);
        return result;
      }
    }
  }
  return result;
}

CompetitiveResult is_strictly_competitive(const GameTree& game, std::size_t cap) {
  if (game.players() != 2) throw PreconditionError("strict competitiveness needs a two-player game");
  return is_strictly_competitive(SubgameView(to_strategic(game, cap)));
}

LeafCheck is_zero_sum(const GameTree& game) {
  for (NodeId v : game.leaves()) {
    Rational sum = 0;
    for (const auto& q : game.payoffs(v)) sum += q;
    if (sum != Rational(0)) return {false, {v}, 0};
  }
  return {};
}

namespace {

// First pair of leaves in `leaves` sharing player i's payoff.
std::optional<std::pair<NodeId, NodeId>> collision(const GameTree& game, const std::vector<NodeId>& leaves,
                                                   std::size_t slot) {
  std::map<Rational, NodeId> seen;
  for (NodeId v : leaves) {
    auto [it, inserted] = seen.emplace(game.payoffs(v)[slot], v);
    if (!inserted) return std::make_pair(it->second, v);
  }
  return std::nullopt;
}

}  // namespace

LeafCheck is_generic(const GameTree& game) {
  const auto leaves = game.leaves();
  for (PlayerId i = 1; i <= game.players(); ++i) {
    if (auto c = collision(game, leaves, static_cast<std::size_t>(i - 1))) return {false, {c->first, c->second}, i};
  }
  return {};
}

LeafCheck is_without_relevant_ties(const GameTree& game) {
  for (NodeId u = 0; u < game.size(); ++u) {
    if (game.is_leaf(u)) continue;
    const auto slot = static_cast<std::size_t>(game.turn(u) - 1);
    if (auto c = collision(game, SubtreeHandle(game, u).leaves(), slot)) {
      return {false, {u, c->first, c->second}, game.turn(u)};
    }
  }
  return {};
}

ClassReport classify(const GameTree& game, std::size_t cap) {
  ClassReport report;
  auto strategic = to_strategic(game, cap);
  const SubgameView full(strategic);
  report.tdi = is_tdi(full);
  if (game.players() == 2) report.strictly_competitive = is_strictly_competitive(full);
  report.zero_sum = is_zero_sum(game);
  report.generic = is_generic(game);
  report.without_relevant_ties = is_without_relevant_ties(game);
  return report;
}

Rational p_max(const SubgameView& view, PlayerId i) {
  require_two_players(view, "p_max");
  std::optional<Rational> best;
  view.for_each_joint([&](const JointIndex& j) {
    const Rational& v = view.base().payoff(j, i);
    if (!best || *best < v) best = v;
  });
  return *best;
}

std::vector<std::size_t> win_set(const SubgameView& view, PlayerId i) {
  const Rational top = p_max(view, i);
  const PayoffTable table(view, i);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    bool all = true;
    for (std::size_t c = 0; c < table.columns() && all; ++c) all = table.at(r, c) == top;
    if (all) out.push_back(table.strategy(r));
  }
  return out;
}

std::vector<std::size_t> lose_set(const SubgameView& view, PlayerId i) {
  const Rational top = p_max(view, i);
  const PlayerId opp = other(i);
  std::vector<std::size_t> out;
  JointIndex j(2);
  for (std::size_t t : view.kept(opp)) {
    j[static_cast<std::size_t>(opp - 1)] = t;
    for (std::size_t s : view.kept(i)) {
      j[static_cast<std::size_t>(i - 1)] = s;
      if (view.base().payoff(j, i) == top) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<Rational> row_minima(const PayoffTable& table) {
  std::vector<Rational> minima;
  minima.reserve(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    Rational m = table.at(r, 0);
    for (std::size_t c = 1; c < table.columns(); ++c) m = std::min(m, table.at(r, c));
    minima.push_back(m);
  }
  return minima;
}

}  // namespace

Rational maxmin(const SubgameView& view, PlayerId i) {
  if (view.empty()) throw PreconditionError("maxmin is undefined on an empty view");
  const auto minima = row_minima(PayoffTable(view, i));
  return *std::max_element(minima.begin(), minima.end());
}

std::vector<std::size_t> security_strategies(const SubgameView& view, PlayerId i) {
  if (view.empty()) throw PreconditionError("security strategies are undefined on an empty view");
  const PayoffTable table(view, i);
  const auto minima = row_minima(table);
  const Rational top = *std::max_element(minima.begin(), minima.end());
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (minima[r] == top) out.push_back(table.strategy(r));
  }
  return out;
}

}  // namespace iewds
