#include "iewds/equilibrium.hpp"

#include <algorithm>

#include "iewds/errors.hpp"

namespace iewds {
namespace {

NodeId follow(const GameTree& game, std::span<const Strategy> joint, NodeId v) {
  while (!game.is_leaf(v)) {
    const Strategy& s = joint[static_cast<std::size_t>(game.turn(v) - 1)];
    v = game.children(v)[s.choices.at(game.decision_index(v))];
  }
  return v;
}

}  // namespace

std::vector<JointIndex> nash_equilibria(const SubgameView& view, std::size_t cap) {
  if (view.joint_count() > cap) {
    throw CapExceeded("view has " + std::to_string(view.joint_count()) + " joint strategies, cap is " +
                      std::to_string(cap));
  }
  std::vector<JointIndex> out;
  const StrategicGame& g = view.base();
  view.for_each_joint([&](const JointIndex& s) {
    JointIndex dev = s;
    for (PlayerId i = 1; i <= view.players(); ++i) {
      const auto slot = static_cast<std::size_t>(i - 1);
      const Rational& current = g.payoff(s, i);
      for (std::size_t alt : view.kept(i)) {
        dev[slot] = alt;
        if (current < g.payoff(dev, i)) return;
      }
      dev[slot] = s[slot];
    }
    out.push_back(s);
  });
  return out;
}

bool is_spe(const GameTree& game, std::span<const Strategy> joint) {
  if (joint.size() != static_cast<std::size_t>(game.players())) {
    throw PreconditionError("joint strategy needs one strategy per player");
  }
  // best[i][v]: highest payoff player i can reach from v when the others play
  // the fixed joint strategy. Children have larger ids, so one reverse sweep.
  const auto n = static_cast<std::size_t>(game.players());
  std::vector<std::vector<Rational>> best(n, std::vector<Rational>(game.size()));
  for (NodeId v = game.size(); v-- > 0;) {
    for (std::size_t p = 0; p < n; ++p) {
      if (game.is_leaf(v)) {
        best[p][v] = game.payoffs(v)[p];
        continue;
      }
      const auto mover = static_cast<std::size_t>(game.turn(v) - 1);
      if (mover == p) {
        Rational m = best[p][game.children(v).front()];
        for (NodeId c : game.children(v)) m = std::max(m, best[p][c]);
        best[p][v] = m;
      } else {
        best[p][v] = best[p][game.children(v)[joint[mover].choices.at(game.decision_index(v))]];
      }
    }
  }
  for (NodeId w = 0; w < game.size(); ++w) {
    if (game.is_leaf(w)) continue;
    const PayoffVector& achieved = game.payoffs(follow(game, joint, w));
    for (std::size_t p = 0; p < n; ++p) {
      if (achieved[p] < best[p][w]) return false;
    }
  }
  return true;
}

std::vector<JointIndex> spe_enumerate(const StrategicGame& game) {
  std::vector<JointIndex> out;
  for (std::size_t flat = 0; flat < game.joint_count(); ++flat) {
    JointIndex j = game.joint_at(flat);
    if (is_spe(game.tree(), game.decode(j))) out.push_back(std::move(j));
  }
  return out;
}

std::vector<Strategy> backward_induction(const GameTree& game) {
  std::vector<Strategy> joint;
  for (PlayerId i = 1; i <= game.players(); ++i) {
    joint.push_back({i, std::vector<std::uint32_t>(game.decision_nodes(i).size(), 0)});
  }
  std::vector<const PayoffVector*> value(game.size(), nullptr);
  for (NodeId v = game.size(); v-- > 0;) {
    if (game.is_leaf(v)) {
      value[v] = &game.payoffs(v);
      continue;
    }
    const auto mover = static_cast<std::size_t>(game.turn(v) - 1);
    const auto kids = game.children(v);
    std::size_t pick = 0;
    for (std::size_t k = 1; k < kids.size(); ++k) {
      if ((*value[kids[pick]])[mover] < (*value[kids[k]])[mover]) pick = k;
    }
    joint[mover].choices[game.decision_index(v)] = static_cast<std::uint32_t>(pick);
    value[v] = value[kids[pick]];
  }
  return joint;
}

SpeSummary spe_invariance(const GameTree& game) {
  SpeSummary summary;
  summary.nodes.resize(game.size());
  for (NodeId v = game.size(); v-- > 0;) {
    SpeNodeSummary& node = summary.nodes[v];
    node.exists = true;
    if (game.is_leaf(v)) {
      node.invariant = true;
      node.unique_payoff = game.payoffs(v);
      continue;
    }
    const auto kids = game.children(v);
    const bool children_invariant =
        std::all_of(kids.begin(), kids.end(), [&](NodeId c) { return summary.nodes[c].invariant; });
    if (!children_invariant) continue;
    const auto mover = static_cast<std::size_t>(game.turn(v) - 1);
    Rational top = (*summary.nodes[kids.front()].unique_payoff)[mover];
    for (NodeId c : kids) top = std::max(top, (*summary.nodes[c].unique_payoff)[mover]);
    std::optional<PayoffVector> unique;
    bool single = true;
    for (NodeId c : kids) {
      const PayoffVector& u = *summary.nodes[c].unique_payoff;
      if (u[mover] != top) continue;
      if (!unique) {
        unique = u;
      } else if (*unique != u) {
        single = false;
      }
    }
    if (single) {
      node.invariant = true;
      node.unique_payoff = std::move(unique);
    }
  }
  return summary;
}

}  // namespace iewds
