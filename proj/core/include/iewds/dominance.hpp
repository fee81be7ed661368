#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iewds/strategic.hpp"

namespace iewds {

// `dominator` weakly dominates `dominated` for `player`: >= against every kept
// opponent profile, > against strict_at. strict_at is a full joint index whose
// slot for `player` holds the dominated strategy.
struct DominanceWitness {
  PlayerId player = 0;
  std::size_t dominated = 0;
  std::size_t dominator = 0;
  JointIndex strict_at;

  friend bool operator==(const DominanceWitness&, const DominanceWitness&) = default;
};

// Player i's payoffs in a view: one row per kept strategy, one column per kept
// opponent profile (in for_each_opponent_profile order).
class PayoffTable {
 public:
  PayoffTable(const SubgameView& view, PlayerId i);

  PlayerId player() const { return player_; }
  std::size_t rows() const { return strategies_.size(); }
  std::size_t columns() const { return profiles_.size(); }
  std::size_t strategy(std::size_t row) const { return strategies_[row]; }
  const JointIndex& profile(std::size_t column) const { return profiles_[column]; }
  const Rational& at(std::size_t row, std::size_t column) const { return values_[row * profiles_.size() + column]; }
  std::optional<std::size_t> row_of(std::size_t strategy) const;

  // Column with strict improvement if row `a` weakly dominates row `b`.
  std::optional<std::size_t> dominates(std::size_t a, std::size_t b) const;

 private:
  PlayerId player_;
  std::vector<std::size_t> strategies_;
  std::vector<JointIndex> profiles_;
  std::vector<Rational> values_;
};

// Witness iff strategy s weakly dominates strategy t for player i in the view.
// Throws LookupError when s or t is not kept and PreconditionError on an empty view.
std::optional<DominanceWitness> weakly_dominates(const SubgameView& view, PlayerId i, std::size_t s, std::size_t t);

// s does strictly better than t against every kept opponent profile.
bool strictly_dominates(const SubgameView& view, PlayerId i, std::size_t s, std::size_t t);

// Every kept strategy of i that has a dominator, with one witness each (the
// lowest-index dominator, the first strict profile). Sorted by dominated index.
std::vector<DominanceWitness> weakly_dominated_set(const SubgameView& view, PlayerId i);
std::vector<DominanceWitness> weakly_dominated_set(const PayoffTable& table);

// Kept strategies of i that nothing dominates.
std::vector<std::size_t> undominated(const SubgameView& view, PlayerId i);

struct WdAdmissibility {
  bool admissible = true;
  // One entry per dominated strategy; the dominator is undominated.
  std::vector<DominanceWitness> certificate;
};

// Checks, for this view only, that every strategy is undominated or dominated
// by an undominated strategy. Certificates follow an ascending dominance chain
// to a maximal element.
WdAdmissibility is_wd_admissible_game(const SubgameView& view);

}  // namespace iewds
