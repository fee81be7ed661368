#include "iewds/dominance.hpp"

#include <algorithm>
#include <numeric>

#include "iewds/errors.hpp"

namespace iewds {
namespace {

void require_kept(const SubgameView& view, PlayerId i, std::size_t index) {
  if (!view.contains(i, index)) {
    throw LookupError("strategy " + view.base().render(i, index) + " of player " + std::to_string(i) +
                      " is not kept in the view");
  }
}

// Groups identical rows. Classes are ordered by their smallest strategy index;
// members of a class are in increasing strategy order.
std::vector<std::vector<std::size_t>> row_classes(const PayoffTable& t) {
  std::vector<std::size_t> order(t.rows());
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < t.columns(); ++c) {
      if (t.at(a, c) != t.at(b, c)) return t.at(a, c) < t.at(b, c);
    }
    return a < b;
  };
  auto row_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < t.columns(); ++c) {
      if (t.at(a, c) != t.at(b, c)) return false;
    }
    return true;
  };
  std::sort(order.begin(), order.end(), row_less);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || !row_equal(order[k - 1], order[k])) classes.emplace_back();
    classes.back().push_back(order[k]);
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

struct ClassDominance {
  std::vector<std::vector<std::size_t>> classes;
  // For each class, the first dominating class and the strict column.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> dominator;
};

ClassDominance analyse(const PayoffTable& t) {
  ClassDominance out;
  out.classes = row_classes(t);
  out.dominator.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (std::size_t d = 0; d < out.classes.size(); ++d) {
      if (d == c) continue;
      if (auto strict = t.dominates(out.classes[d].front(), out.classes[c].front())) {
        out.dominator[c] = std::make_pair(d, *strict);
        break;
      }
    }
  }
  return out;
}

DominanceWitness make_witness(const PayoffTable& t, std::size_t dominated_row, std::size_t dominator_row,
                              std::size_t column) {
  DominanceWitness w;
  w.player = t.player();
  w.dominated = t.strategy(dominated_row);
  w.dominator = t.strategy(dominator_row);
  w.strict_at = t.profile(column);
  w.strict_at[static_cast<std::size_t>(t.player() - 1)] = w.dominated;
  return w;
}

}  // namespace

PayoffTable::PayoffTable(const SubgameView& view, PlayerId i) : player_(i), strategies_(view.kept(i)) {
  if (view.empty()) throw PreconditionError("dominance is undefined on an empty view");
  view.for_each_opponent_profile(i, [&](const JointIndex& j) { profiles_.push_back(j); });
  values_.reserve(strategies_.size() * profiles_.size());
  const auto me = static_cast<std::size_t>(i - 1);
  for (std::size_t s : strategies_) {
    for (JointIndex j : profiles_) {
      j[me] = s;
      values_.push_back(view.base().payoff(j, i));
    }
  }
}

std::optional<std::size_t> PayoffTable::row_of(std::size_t strategy) const {
  auto it = std::lower_bound(strategies_.begin(), strategies_.end(), strategy);
  if (it == strategies_.end() || *it != strategy) return std::nullopt;
  return static_cast<std::size_t>(it - strategies_.begin());
}

std::optional<std::size_t> PayoffTable::dominates(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> strict;
  for (std::size_t c = 0; c < profiles_.size(); ++c) {
    const Rational& x = at(a, c);
    const Rational& y = at(b, c);
    if (x < y) return std::nullopt;
    if (!strict && y < x) strict = c;
  }
  return strict;
}

std::optional<DominanceWitness> weakly_dominates(const SubgameView& view, PlayerId i, std::size_t s, std::size_t t) {
  if (view.empty()) throw PreconditionError("dominance is undefined on an empty view");
  require_kept(view, i, s);
  require_kept(view, i, t);
  const PayoffTable table(view, i);
  const std::size_t rs = *table.row_of(s);
  const std::size_t rt = *table.row_of(t);
  auto strict = table.dominates(rs, rt);
  if (!strict) return std::nullopt;
  return make_witness(table, rt, rs, *strict);
}

bool strictly_dominates(const SubgameView& view, PlayerId i, std::size_t s, std::size_t t) {
  if (view.empty()) throw PreconditionError("dominance is undefined on an empty view");
  require_kept(view, i, s);
  require_kept(view, i, t);
  const PayoffTable table(view, i);
  const std::size_t rs = *table.row_of(s);
  const std::size_t rt = *table.row_of(t);
  for (std::size_t c = 0; c < table.columns(); ++c) {
    if (!(table.at(rt, c) < table.at(rs, c))) return false;
  }
  return true;
}

std::vector<DominanceWitness> weakly_dominated_set(const PayoffTable& table) {
  const ClassDominance dom = analyse(table);
  std::vector<DominanceWitness> out;
  for (std::size_t c = 0; c < dom.classes.size(); ++c) {
    if (!dom.dominator[c]) continue;
    const auto [d, column] = *dom.dominator[c];
    for (std::size_t row : dom.classes[c]) out.push_back(make_witness(table, row, dom.classes[d].front(), column));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dominated < b.dominated; });
  return out;
}

std::vector<DominanceWitness> weakly_dominated_set(const SubgameView& view, PlayerId i) {
  return weakly_dominated_set(PayoffTable(view, i));
}

std::vector<std::size_t> undominated(const SubgameView& view, PlayerId i) {
  const auto dominated = weakly_dominated_set(view, i);
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t s : view.kept(i)) {
    if (k < dominated.size() && dominated[k].dominated == s) {
      ++k;
      continue;
    }
    out.push_back(s);
  }
  return out;
}

WdAdmissibility is_wd_admissible_game(const SubgameView& view) {
  WdAdmissibility result;
  for (PlayerId i = 1; i <= view.players(); ++i) {
    const PayoffTable table(view, i);
    const ClassDominance dom = analyse(table);
    for (std::size_t c = 0; c < dom.classes.size(); ++c) {
      if (!dom.dominator[c]) continue;
      // Climb to a maximal class. Dominance is a strict partial order on the
      // finitely many classes, so the walk ends within classes.size() hops.
      std::size_t top = c;
      std::size_t hops = 0;
      while (dom.dominator[top] && hops++ <= dom.classes.size()) top = dom.dominator[top]->first;
      if (dom.dominator[top]) {
        result.admissible = false;
        continue;
      }
      const std::size_t top_row = dom.classes[top].front();
      for (std::size_t row : dom.classes[c]) {
        auto strict = table.dominates(top_row, row);
        if (!strict) {
          result.admissible = false;
          continue;
        }
        result.certificate.push_back(make_witness(table, row, top_row, *strict));
      }
    }
  }
  std::stable_sort(result.certificate.begin(), result.certificate.end(), [](const auto& a, const auto& b) {
    return a.player != b.player ? a.player < b.player : a.dominated < b.dominated;
  });
  return result;
}

}  // namespace iewds
