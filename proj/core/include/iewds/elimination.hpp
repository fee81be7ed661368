#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iewds/dominance.hpp"
#include "iewds/strategic.hpp"

namespace iewds {

// Per-player sets of base strategy indices, slot i-1 for player i.
using StepSets = std::vector<std::vector<std::size_t>>;

struct EliminationStep {
  StepSets removed;
  // One witness per removed strategy, evaluated in the pre-step view.
  std::vector<DominanceWitness> witnesses;
  // Named strategies that were already absent from the pre-step view.
  StepSets disregarded;

  bool is_noop() const;
};

struct EliminationTrace {
  SubgameView initial;
  std::vector<EliminationStep> steps;
  SubgameView final_view;

  const StrategicGame& base() const { return initial.base(); }
};

// Removes the named strategies from a non-empty view. Strategies not in the
// view are disregarded; every other one must be weakly dominated in the view
// (else NotDominated). The result may be empty.
std::pair<SubgameView, EliminationStep> eliminate_step(const SubgameView& view, const StepSets& sets);

// H^1: removes every weakly dominated strategy of every player at once.
std::pair<SubgameView, EliminationStep> max_round(const SubgameView& view);

// Up to k maximal rounds; stops at the first round that removes nothing, so
// steps.size() is the number of effective rounds.
EliminationTrace iterate(const SubgameView& view, std::size_t k);

struct Fixpoint {
  SubgameView view;
  std::size_t rounds = 0;
};

// Iterates maximal rounds until the kept sets stop changing.
Fixpoint fixpoint(const SubgameView& view);

// Applies the sets one after another. Throws NotDominated for an invalid step
// and IntermediateEmpty if any step but the last empties the view.
EliminationTrace validate_sequence(const SubgameView& view, std::span<const StepSets> sequence);

// Replays the trace's removed sets from its initial view and compares the
// result with final_view. Used as an audit of externally built traces.
bool replay_matches(const EliminationTrace& trace);

// Empty StepSets sized for the view's players.
StepSets empty_sets(int players);

}  // namespace iewds
