#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "iewds/elimination.hpp"
#include "iewds/strategic.hpp"

namespace iewds {

// Strategy-set transport between Gamma(G) and Gamma(G^w) for a child w of
// G's root. Indices on the subgame side refer to to_strategic applied to
// SubtreeHandle(tree, w).materialize(). Every function below throws
// PreconditionError when w is not a child of the root.

// Index in Gamma(G^w) of the restriction s^w of strategy s of player j.
std::size_t restrict_strategy(const StrategicGame& game, NodeId w, PlayerId j, std::size_t s);

// [A]: strategies of G that restrict into A and, for the root mover, choose w
// at the root. Sorted.
std::vector<std::size_t> lift_set(const StrategicGame& game, NodeId w, PlayerId j, std::span<const std::size_t> a);
StepSets lift_sets(const StrategicGame& game, NodeId w, const StepSets& sets);

// <A>: strategies of G that restrict into A, whatever the root choice.
std::vector<std::size_t> extend_set(const StrategicGame& game, NodeId w, PlayerId j, std::span<const std::size_t> a);
// <H> for a view H of Gamma(G^w).
SubgameView extend_view(const StrategicGamePtr& game, NodeId w, const SubgameView& child);

// J is non-empty and closed, for every player j, under arbitrary changes of
// j's choices at the decision nodes of G^w and, when j moves at the root, at
// the root.
bool does_not_depend(const SubgameView& view, NodeId w);

struct RootElimination {
  // val^w per root child, in child order.
  std::vector<PayoffVector> values;
  // Root children whose value is maximal for the root mover.
  std::vector<NodeId> best;
  // A, in the root mover's slot.
  StepSets removed;
  EliminationStep step;
  SubgameView result;
};

// The final step of the construction. child_views[k] is a trivial view of
// Gamma(G^w) for the k-th child w of the root. `current` is the view the step
// is applied to; it defaults to the intersection of the extensions <H^w>.
// When a child game has at most `oracle_cap` joint strategies its SPE are
// enumerated and must lie in its view. Throws NotInvariant if G is not
// SPE-invariant and PreconditionError for any other failed hypothesis.
RootElimination root_elimination(const StrategicGamePtr& game, std::span<const SubgameView> child_views,
                                 const std::optional<SubgameView>& current = std::nullopt,
                                 std::size_t oracle_cap = 4096);

struct SolveOptions {
  std::size_t cap = kDefaultJointCap;
  // Drop steps that remove nothing. They are kept by default so the trace
  // follows the recursion, one root step per decision node.
  bool compact_noops = false;
  // SPE are enumerated for the containment check up to this many joint
  // strategies; above it only the backward induction profile is checked.
  std::size_t oracle_cap = 4096;
};

struct SolveReport {
  EliminationTrace trace;
  SubgameView final_view;
  PayoffVector outcome;
  bool spe_containment = false;
  // True when spe_containment was established against every SPE.
  bool spe_exhaustive = false;

  std::size_t step_count() const { return trace.steps.size(); }
};

// Builds an elimination sequence of Gamma(G) ending in a trivial view that
// contains every SPE: solve each direct subgame, lift and replay its steps in
// child order, then eliminate at the root. Throws NotInvariant unless G is
// SPE-invariant.
SolveReport solve_constructive(std::shared_ptr<const GameTree> game, const SolveOptions& options = {});
SolveReport solve_constructive(const GameTree& game, const SolveOptions& options = {});

}  // namespace iewds
