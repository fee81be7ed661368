#include "iewds/elimination.hpp"

#include <algorithm>

#include "iewds/errors.hpp"

namespace iewds {

bool EliminationStep::is_noop() const {
  return std::all_of(removed.begin(), removed.end(), [](const auto& r) { return r.empty(); });
}

StepSets empty_sets(int players) { return StepSets(static_cast<std::size_t>(players)); }

std::pair<SubgameView, EliminationStep> eliminate_step(const SubgameView& view, const StepSets& sets) {
  if (view.empty()) throw PreconditionError("cannot eliminate from an empty view");
  if (sets.size() != static_cast<std::size_t>(view.players())) {
    throw PreconditionError("elimination step needs one set per player");
  }
  EliminationStep step;
  step.removed = empty_sets(view.players());
  step.disregarded = empty_sets(view.players());
  std::vector<std::vector<std::size_t>> kept = view.kept_sets();

  for (PlayerId i = 1; i <= view.players(); ++i) {
    const auto slot = static_cast<std::size_t>(i - 1);
    std::vector<std::size_t> named = sets[slot];
    std::sort(named.begin(), named.end());
    named.erase(std::unique(named.begin(), named.end()), named.end());

    std::vector<std::size_t> present;
    for (std::size_t s : named) {
      if (s >= view.base().strategy_count(i)) {
        throw LookupError("strategy index " + std::to_string(s) + " out of range for player " + std::to_string(i));
      }
      (view.contains(i, s) ? present : step.disregarded[slot]).push_back(s);
    }
    if (present.empty()) continue;

    const PayoffTable table(view, i);
    for (std::size_t s : present) {
      const std::size_t row = *table.row_of(s);
      bool found = false;
      for (std::size_t d = 0; d < table.rows() && !found; ++d) {
        if (d == row) continue;
        if (auto strict = table.dominates(d, row)) {
          DominanceWitness w;
          w.player = i;
          w.dominated = s;
          w.dominator = table.strategy(d);
          w.strict_at = table.profile(*strict);
          w.strict_at[slot] = s;
          step.witnesses.push_back(std::move(w));
          found = true;
        }
      }
      if (!found) throw NotDominated(i, s, view.base().render(i, s));
    }
    step.removed[slot] = present;
    std::vector<std::size_t> rest;
    std::set_difference(kept[slot].begin(), kept[slot].end(), present.begin(), present.end(),
                        std::back_inserter(rest));
    kept[slot] = std::move(rest);
  }
  return {SubgameView(view.base_ptr(), std::move(kept)), std::move(step)};
}

std::pair<SubgameView, EliminationStep> max_round(const SubgameView& view) {
  if (view.empty()) throw PreconditionError("cannot eliminate from an empty view");
  EliminationStep step;
  step.removed = empty_sets(view.players());
  step.disregarded = empty_sets(view.players());
  std::vector<std::vector<std::size_t>> kept = view.kept_sets();
  for (PlayerId i = 1; i <= view.players(); ++i) {
    const auto slot = static_cast<std::size_t>(i - 1);
    for (auto& w : weakly_dominated_set(view, i)) {
      step.removed[slot].push_back(w.dominated);
      step.witnesses.push_back(std::move(w));
    }
    std::vector<std::size_t> rest;
    std::set_difference(kept[slot].begin(), kept[slot].end(), step.removed[slot].begin(), step.removed[slot].end(),
                        std::back_inserter(rest));
    kept[slot] = std::move(rest);
  }
  SubgameView next(view.base_ptr(), std::move(kept));
  // Dominance is a strict partial order on a finite set, so some maximal
  // strategy always survives.
  if (next.empty()) throw Error("maximal round emptied a finite view");
  return {std::move(next), std::move(step)};
}

EliminationTrace iterate(const SubgameView& view, std::size_t k) {
  EliminationTrace trace{view, {}, view};
  for (std::size_t round = 0; round < k; ++round) {
    auto [next, step] = max_round(trace.final_view);
    if (step.is_noop()) break;
    trace.steps.push_back(std::move(step));
    trace.final_view = std::move(next);
  }
  return trace;
}

Fixpoint fixpoint(const SubgameView& view) {
  Fixpoint out{view, 0};
  while (true) {
    auto [next, step] = max_round(out.view);
    if (next == out.view) return out;
    out.view = std::move(next);
    ++out.rounds;
  }
}

EliminationTrace validate_sequence(const SubgameView& view, std::span<const StepSets> sequence) {
  EliminationTrace trace{view, {}, view};
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (trace.final_view.empty()) {
      if (k == 0) throw PreconditionError("cannot eliminate from an empty view");
      throw IntermediateEmpty(k - 1);
    }
    auto [next, step] = eliminate_step(trace.final_view, sequence[k]);
    trace.steps.push_back(std::move(step));
    trace.final_view = std::move(next);
  }
  return trace;
}

bool replay_matches(const EliminationTrace& trace) {
  std::vector<StepSets> sets;
  sets.reserve(trace.steps.size());
  for (const auto& s : trace.steps) sets.push_back(s.removed);
  try {
    return validate_sequence(trace.initial, sets).final_view == trace.final_view;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace iewds
