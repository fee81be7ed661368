#include "iewds/strategic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "iewds/errors.hpp"

namespace iewds {
namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap, const std::string& what) {
  if (b != 0 && a > cap / b) throw CapExceeded(what + " exceeds the cap of " + std::to_string(cap));
  const std::size_t r = a * b;
  if (r > cap) throw CapExceeded(what + " exceeds the cap of " + std::to_string(cap));
  return r;
}

}  // namespace

StrategySpace::StrategySpace(const GameTree& game, PlayerId player, std::size_t cap)
    : player_(player), nodes_(game.decision_nodes(player)) {
  radices_.reserve(nodes_.size());
  for (NodeId v : nodes_) radices_.push_back(static_cast<std::uint32_t>(game.children(v).size()));
  weights_.assign(nodes_.size(), 1);
  for (std::size_t k = nodes_.size(); k-- > 0;) {
    weights_[k] = size_;
    size_ = checked_mul(size_, radices_[k], cap, "strategy count of player " + std::to_string(player));
  }
}

Strategy StrategySpace::decode(std::size_t index) const {
  if (index >= size_) throw LookupError("strategy index " + std::to_string(index) + " out of range");
  Strategy s{player_, {}};
  s.choices.reserve(nodes_.size());
  for (std::size_t k = 0; k < nodes_.size(); ++k) s.choices.push_back(digit(index, k));
  return s;
}

std::size_t StrategySpace::encode(const Strategy& s) const {
  if (s.player != player_ || s.choices.size() != nodes_.size()) {
    throw LookupError("strategy does not belong to player " + std::to_string(player_));
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (s.choices[k] >= radices_[k]) throw LookupError("choice out of range in strategy");
    index += weights_[k] * s.choices[k];
  }
  return index;
}

std::string StrategySpace::render(const GameTree& game, std::size_t index) const {
  std::string out;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (k > 0) out += ",";
    const NodeId v = nodes_[k];
    out += game.label(v) + "->" + game.label(game.children(v)[digit(index, k)]);
  }
  return out;
}

std::optional<std::size_t> StrategySpace::parse(const GameTree& game, std::string_view text) const {
  Strategy s{player_, std::vector<std::uint32_t>(nodes_.size(), 0)};
  std::vector<bool> seen(nodes_.size(), false);
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    const std::size_t arrow = item.find("->");
    if (arrow == std::string_view::npos) return std::nullopt;
    const auto v = game.find(item.substr(0, arrow));
    const auto c = game.find(item.substr(arrow + 2));
    if (!v || !c || game.is_leaf(*v) || game.turn(*v) != player_) return std::nullopt;
    const auto p = game.parent(*c);
    if (!p || *p != *v) return std::nullopt;
    const std::size_t k = game.decision_index(*v);
    if (seen[k]) return std::nullopt;
    seen[k] = true;
    ++count;
    s.choices[k] = static_cast<std::uint32_t>(game.child_position(*c));
  }
  if (count != nodes_.size()) return std::nullopt;
  return encode(s);
}

std::vector<Strategy> strategies(const GameTree& game, PlayerId i, std::size_t cap) {
  const StrategySpace space(game, i, cap);
  std::vector<Strategy> out;
  out.reserve(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) out.push_back(space.decode(k));
  return out;
}

std::vector<NodeId> play(const GameTree& game, std::span<const Strategy> joint) {
  if (joint.size() != static_cast<std::size_t>(game.players())) {
    throw PreconditionError("joint strategy needs one strategy per player");
  }
  std::vector<NodeId> path{game.root()};
  NodeId v = game.root();
  while (!game.is_leaf(v)) {
    const Strategy& s = joint[static_cast<std::size_t>(game.turn(v) - 1)];
    const std::size_t k = game.decision_index(v);
    if (k >= s.choices.size() || s.choices[k] >= game.children(v).size()) {
      throw LookupError("strategy does not cover node '" + game.label(v) + "'");
    }
    v = game.children(v)[s.choices[k]];
    path.push_back(v);
  }
  return path;
}

NodeId leaf(const GameTree& game, std::span<const Strategy> joint) { return play(game, joint).back(); }

const PayoffVector& payoff(const GameTree& game, std::span<const Strategy> joint) {
  return game.payoffs(leaf(game, joint));
}

StrategicGame::StrategicGame(std::shared_ptr<const GameTree> game, std::size_t cap) : game_(std::move(game)) {
  const auto n = static_cast<std::size_t>(game_->players());
  spaces_.reserve(n);
  for (PlayerId i = 1; i <= game_->players(); ++i) spaces_.emplace_back(*game_, i, cap);

  flat_weights_.assign(n, 1);
  std::size_t total = 1;
  for (std::size_t p = n; p-- > 0;) {
    flat_weights_[p] = total;
    total = checked_mul(total, spaces_[p].size(), cap, "joint strategy count");
  }

  // Walk the tree once per joint strategy. Only digits of decision nodes on
  // the play are read.
  leaf_table_.resize(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t p = 0; p < n; ++p) {
      idx[p] = rest / flat_weights_[p];
      rest %= flat_weights_[p];
    }
    NodeId v = game_->root();
    while (!game_->is_leaf(v)) {
      const auto p = static_cast<std::size_t>(game_->turn(v) - 1);
      v = game_->children(v)[spaces_[p].digit(idx[p], game_->decision_index(v))];
    }
    leaf_table_[flat] = v;
  }
}

std::size_t StrategicGame::flat_index(std::span<const std::size_t> joint) const {
  std::size_t flat = 0;
  for (std::size_t p = 0; p < spaces_.size(); ++p) flat += joint[p] * flat_weights_[p];
  return flat;
}

JointIndex StrategicGame::joint_at(std::size_t flat) const {
  JointIndex joint(spaces_.size());
  for (std::size_t p = 0; p < spaces_.size(); ++p) {
    joint[p] = flat / flat_weights_[p];
    flat %= flat_weights_[p];
  }
  return joint;
}

std::vector<Strategy> StrategicGame::decode(std::span<const std::size_t> joint) const {
  std::vector<Strategy> out;
  out.reserve(spaces_.size());
  for (std::size_t p = 0; p < spaces_.size(); ++p) out.push_back(spaces_[p].decode(joint[p]));
  return out;
}

std::string StrategicGame::render(std::span<const std::size_t> joint) const {
  std::string out = "(";
  for (std::size_t p = 0; p < spaces_.size(); ++p) {
    if (p > 0) out += " | ";
    out += spaces_[p].render(*game_, joint[p]);
  }
  return out + ")";
}

StrategicGamePtr to_strategic(const GameTree& game, std::size_t cap) {
  return to_strategic(std::make_shared<const GameTree>(game), cap);
}

StrategicGamePtr to_strategic(std::shared_ptr<const GameTree> game, std::size_t cap) {
  return std::make_shared<const StrategicGame>(std::move(game), cap);
}

SubgameView::SubgameView(StrategicGamePtr base) : base_(std::move(base)) {
  kept_.resize(static_cast<std::size_t>(base_->players()));
  for (PlayerId i = 1; i <= base_->players(); ++i) {
    auto& k = kept_[static_cast<std::size_t>(i - 1)];
    k.resize(base_->strategy_count(i));
    for (std::size_t s = 0; s < k.size(); ++s) k[s] = s;
  }
}

SubgameView::SubgameView(StrategicGamePtr base, std::vector<std::vector<std::size_t>> kept)
    : base_(std::move(base)), kept_(std::move(kept)) {
  if (kept_.size() != static_cast<std::size_t>(base_->players())) {
    throw LookupError("view needs one kept set per player");
  }
  for (std::size_t p = 0; p < kept_.size(); ++p) {
    auto& k = kept_[p];
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (!k.empty() && k.back() >= base_->strategy_count(static_cast<PlayerId>(p + 1))) {
      throw LookupError("kept index " + std::to_string(k.back()) + " outside the strategy list of player " +
                        std::to_string(p + 1));
    }
  }
}

bool SubgameView::contains(PlayerId i, std::size_t index) const {
  const auto& k = kept(i);
  return std::binary_search(k.begin(), k.end(), index);
}

bool SubgameView::contains(std::span<const std::size_t> joint) const {
  for (std::size_t p = 0; p < kept_.size(); ++p) {
    if (!std::binary_search(kept_[p].begin(), kept_[p].end(), joint[p])) return false;
  }
  return true;
}

bool SubgameView::empty() const {
  return std::any_of(kept_.begin(), kept_.end(), [](const auto& k) { return k.empty(); });
}

std::size_t SubgameView::joint_count() const {
  std::size_t total = 1;
  for (const auto& k : kept_) total *= k.size();
  return total;
}

std::set<PayoffVector> outcomes(const SubgameView& view) {
  std::set<NodeId> leaves;
  view.for_each_joint([&](const JointIndex& j) { leaves.insert(view.base().leaf(j)); });
  std::set<PayoffVector> out;
  for (NodeId v : leaves) out.insert(view.base().tree().payoffs(v));
  return out;
}

bool is_trivial(const SubgameView& view) {
  if (view.empty()) throw PreconditionError("is_trivial is undefined on an empty view");
  return outcomes(view).size() == 1;
}

SubgameView intersect_views(std::span<const SubgameView> views) {
  if (views.empty()) throw PreconditionError("intersect_views needs at least one view");
  std::vector<std::vector<std::size_t>> kept = views.front().kept_sets();
  for (const auto& v : views.subspan(1)) {
    if (v.base_ptr() != views.front().base_ptr()) throw PreconditionError("views have different bases");
    for (std::size_t p = 0; p < kept.size(); ++p) {
      std::vector<std::size_t> both;
      std::set_intersection(kept[p].begin(), kept[p].end(), v.kept_sets()[p].begin(), v.kept_sets()[p].end(),
                            std::back_inserter(both));
      kept[p] = std::move(both);
    }
  }
  return SubgameView(views.front().base_ptr(), std::move(kept));
}

std::string to_csv(const StrategicGame& game) {
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  if (game.players() == 2) {
    out << "strategy";
    for (std::size_t c = 0; c < game.strategy_count(2); ++c) out << ',' << quote(game.render(2, c));
    out << '\n';
    for (std::size_t r = 0; r < game.strategy_count(1); ++r) {
      out << quote(game.render(1, r));
      for (std::size_t c = 0; c < game.strategy_count(2); ++c) {
        const std::size_t j[2] = {r, c};
        out << ',' << quote(to_string(game.payoff(j)));
      }
      out << '\n';
    }
    return out.str();
  }
  for (PlayerId i = 1; i <= game.players(); ++i) out << (i > 1 ? "," : "") << "player" << i;
  out << ",payoff\n";
  SubgameView(std::make_shared<const StrategicGame>(game)).for_each_joint([&](const JointIndex& j) {
    for (std::size_t p = 0; p < j.size(); ++p) out << (p > 0 ? "," : "") << quote(game.render(static_cast<PlayerId>(p + 1), j[p]));
    out << ',' << quote(to_string(game.payoff(j))) << '\n';
  });
  return out.str();
}

}  // namespace iewds
