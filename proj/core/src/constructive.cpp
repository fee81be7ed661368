#include "iewds/constructive.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "iewds/equilibrium.hpp"
#include "iewds/errors.hpp"

namespace iewds {
namespace {

void require_root_child(const GameTree& tree, NodeId w) {
  const auto p = w < tree.size() ? tree.parent(w) : std::nullopt;
  if (!p || *p != tree.root()) {
    throw PreconditionError("node " + std::to_string(w) + " is not a child of the root");
  }
}

// Digits of player j's strategies that live inside G^w, with the weights they
// carry in Gamma(G^w).
struct ChildDigits {
  std::size_t first = 0;
  std::size_t count = 0;
  std::vector<std::size_t> weights;
  bool root_mover = false;
  std::uint32_t root_choice = 0;
};

ChildDigits child_digits(const StrategicGame& game, NodeId w, PlayerId j) {
  const GameTree& tree = game.tree();
  require_root_child(tree, w);
  const StrategySpace& space = game.space(j);
  const auto& nodes = space.nodes();
  ChildDigits d;
  const auto lo = std::lower_bound(nodes.begin(), nodes.end(), w);
  const auto hi = std::lower_bound(lo, nodes.end(), tree.subtree_end(w));
  d.first = static_cast<std::size_t>(lo - nodes.begin());
  d.count = static_cast<std::size_t>(hi - lo);
  d.weights.assign(d.count, 1);
  std::size_t acc = 1;
  for (std::size_t k = d.count; k-- > 0;) {
    d.weights[k] = acc;
    acc *= space.radix(d.first + k);
  }
  d.root_mover = tree.turn(tree.root()) == j;
  d.root_choice = static_cast<std::uint32_t>(tree.child_position(w));
  return d;
}

std::size_t restrict_with(const StrategySpace& space, const ChildDigits& d, std::size_t s) {
  std::size_t r = 0;
  for (std::size_t k = 0; k < d.count; ++k) r += space.digit(s, d.first + k) * d.weights[k];
  return r;
}

std::vector<std::size_t> transport(const StrategicGame& game, NodeId w, PlayerId j, std::span<const std::size_t> a,
                                   bool force_root) {
  const ChildDigits d = child_digits(game, w, j);
  std::vector<std::size_t> wanted(a.begin(), a.end());
  std::sort(wanted.begin(), wanted.end());
  std::vector<std::size_t> out;
  if (wanted.empty()) return out;
  const StrategySpace& space = game.space(j);
  for (std::size_t s = 0; s < space.size(); ++s) {
    if (force_root && d.root_mover && space.digit(s, 0) != d.root_choice) continue;
    if (std::binary_search(wanted.begin(), wanted.end(), restrict_with(space, d, s))) out.push_back(s);
  }
  return out;
}

}  // namespace

std::size_t restrict_strategy(const StrategicGame& game, NodeId w, PlayerId j, std::size_t s) {
  if (s >= game.strategy_count(j)) throw LookupError("strategy index " + std::to_string(s) + " out of range");
  return restrict_with(game.space(j), child_digits(game, w, j), s);
}

std::vector<std::size_t> lift_set(const StrategicGame& game, NodeId w, PlayerId j, std::span<const std::size_t> a) {
  return transport(game, w, j, a, true);
}

StepSets lift_sets(const StrategicGame& game, NodeId w, const StepSets& sets) {
  StepSets out = empty_sets(game.players());
  for (PlayerId j = 1; j <= game.players(); ++j) {
    out[static_cast<std::size_t>(j - 1)] = lift_set(game, w, j, sets.at(static_cast<std::size_t>(j - 1)));
  }
  return out;
}

std::vector<std::size_t> extend_set(const StrategicGame& game, NodeId w, PlayerId j, std::span<const std::size_t> a) {
  return transport(game, w, j, a, false);
}

SubgameView extend_view(const StrategicGamePtr& game, NodeId w, const SubgameView& child) {
  std::vector<std::vector<std::size_t>> kept;
  for (PlayerId j = 1; j <= game->players(); ++j) kept.push_back(extend_set(*game, w, j, child.kept(j)));
  return SubgameView(game, std::move(kept));
}

bool does_not_depend(const SubgameView& view, NodeId w) {
  const StrategicGame& game = view.base();
  require_root_child(game.tree(), w);
  if (view.empty()) return false;
  for (PlayerId j = 1; j <= game.players(); ++j) {
    const StrategySpace& space = game.space(j);
    const ChildDigits d = child_digits(game, w, j);
    std::vector<std::size_t> free_digits;
    if (d.root_mover) free_digits.push_back(0);
    for (std::size_t k = 0; k < d.count; ++k) free_digits.push_back(d.first + k);
    std::size_t block = 1;
    for (std::size_t k : free_digits) block *= space.radix(k);
    // Kept strategies grouped by their choices outside the free digits; every
    // group must be complete.
    std::unordered_map<std::size_t, std::size_t> groups;
    for (std::size_t s : view.kept(j)) {
      std::size_t key = s;
      for (std::size_t k : free_digits) key -= space.digit(s, k) * space.weight(k);
      ++groups[key];
    }
    for (const auto& [key, size] : groups) {
      if (size != block) return false;
    }
  }
  return true;
}

RootElimination root_elimination(const StrategicGamePtr& game, std::span<const SubgameView> child_views,
                                 const std::optional<SubgameView>& current, std::size_t oracle_cap) {
  const GameTree& tree = game->tree();
  if (tree.is_leaf(tree.root())) throw PreconditionError("root elimination needs an internal root");
  const auto kids = tree.children(tree.root());
  if (child_views.size() != kids.size()) {
    throw PreconditionError("expected one child view per root child (" + std::to_string(kids.size()) + ")");
  }
  if (!spe_invariance(tree).invariant()) throw NotInvariant("the game is not SPE-invariant");

  RootElimination out{{}, {}, empty_sets(game->players()), {}, SubgameView(game)};
  for (std::size_t k = 0; k < kids.size(); ++k) {
    const SubgameView& h = child_views[k];
    const std::string where = "child view of node '" + tree.label(kids[k]) + "'";
    if (h.base().tree().size() != SubtreeHandle(tree, kids[k]).size()) {
      throw PreconditionError(where + " is not over the matching subgame");
    }
    if (h.empty() || !is_trivial(h)) throw PreconditionError(where + " is not trivial");
    if (h.base().joint_count() <= oracle_cap) {
      for (const auto& s : spe_enumerate(h.base())) {
        if (!h.contains(s)) throw PreconditionError(where + " misses the SPE " + h.base().render(s));
      }
    }
    out.values.push_back(*outcomes(h).begin());
  }

  const PlayerId i = tree.turn(tree.root());
  const auto slot = static_cast<std::size_t>(i - 1);
  Rational top = out.values.front()[slot];
  for (const auto& v : out.values) top = std::max(top, v[slot]);
  std::vector<std::uint32_t> best_positions;
  for (std::size_t k = 0; k < kids.size(); ++k) {
    if (out.values[k][slot] == top) {
      out.best.push_back(kids[k]);
      best_positions.push_back(static_cast<std::uint32_t>(k));
    }
  }
  if (out.best.empty()) throw std::logic_error("no maximal root child");

  SubgameView start = current ? *current : SubgameView(game);
  if (!current) {
    std::vector<SubgameView> extensions;
    for (std::size_t k = 0; k < kids.size(); ++k) extensions.push_back(extend_view(game, kids[k], child_views[k]));
    start = intersect_views(extensions);
  }
  if (start.empty()) throw PreconditionError("root elimination applied to an empty view");

  const StrategySpace& space = game->space(i);
  for (std::size_t s : start.kept(i)) {
    if (!std::binary_search(best_positions.begin(), best_positions.end(), space.digit(s, 0))) {
      out.removed[slot].push_back(s);
    }
  }
  auto [result, step] = eliminate_step(start, out.removed);
  if (result.empty() || !is_trivial(result)) throw std::logic_error("root elimination did not produce a trivial view");
  out.step = std::move(step);
  out.result = std::move(result);
  return out;
}

namespace {

struct Partial {
  std::vector<StepSets> steps;
  SubgameView final_view;
};

Partial solve_rec(const std::shared_ptr<const GameTree>& tree, const SolveOptions& options) {
  auto game = to_strategic(tree, options.cap);
  SubgameView view(game);
  if (tree->is_leaf(tree->root())) return {{}, view};

  Partial out{{}, view};
  std::vector<SubgameView> child_views;
  for (NodeId w : tree->children(tree->root())) {
    auto child = std::make_shared<const GameTree>(SubtreeHandle(*tree, w).materialize());
    Partial sub = solve_rec(child, options);
    for (const auto& sets : sub.steps) {
      StepSets lifted = lift_sets(*game, w, sets);
      view = eliminate_step(view, lifted).first;
      out.steps.push_back(std::move(lifted));
    }
    child_views.push_back(std::move(sub.final_view));
  }
  RootElimination root = root_elimination(game, child_views, view, options.oracle_cap);
  out.steps.push_back(std::move(root.removed));
  out.final_view = std::move(root.result);
  return out;
}

}  // namespace

SolveReport solve_constructive(std::shared_ptr<const GameTree> game, const SolveOptions& options) {
  if (!spe_invariance(*game).invariant()) throw NotInvariant("the game is not SPE-invariant");
  Partial partial = solve_rec(game, options);

  // Replay from scratch: every step is re-validated against Gamma(G).
  const SubgameView initial(partial.final_view.base_ptr());
  EliminationTrace trace = validate_sequence(initial, partial.steps);
  if (!(trace.final_view == partial.final_view)) throw std::logic_error("replayed trace diverges from the recursion");
  if (options.compact_noops) {
    std::erase_if(trace.steps, [](const EliminationStep& s) { return s.is_noop(); });
  }

  SolveReport report{std::move(trace), partial.final_view, {}, false, false};
  report.outcome = *outcomes(report.final_view).begin();
  const StrategicGame& base = report.final_view.base();
  if (base.joint_count() <= options.oracle_cap) {
    const auto spe = spe_enumerate(base);
    report.spe_containment =
        std::all_of(spe.begin(), spe.end(), [&](const JointIndex& s) { return report.final_view.contains(s); });
    report.spe_exhaustive = true;
  } else {
    JointIndex bi;
    const auto profile = backward_induction(*game);
    for (PlayerId i = 1; i <= base.players(); ++i) {
      bi.push_back(base.space(i).encode(profile[static_cast<std::size_t>(i - 1)]));
    }
    report.spe_containment = report.final_view.contains(bi);
  }
  return report;
}

SolveReport solve_constructive(const GameTree& game, const SolveOptions& options) {
  return solve_constructive(std::make_shared<const GameTree>(game), options);
}

}  // namespace iewds
