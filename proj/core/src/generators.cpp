#include "iewds/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>

namespace iewds {
namespace {

class Builder {
 public:
  explicit Builder(int players) { desc_.players = players; }

  void leaf(const std::string& id, PayoffVector payoffs) {
    RawNode n;
    n.id = id;
    n.leaf = true;
    n.payoffs = std::move(payoffs);
    desc_.nodes.push_back(std::move(n));
  }
  void leaf(const std::string& id, std::initializer_list<std::int64_t> payoffs) {
    PayoffVector p;
    for (auto q : payoffs) p.emplace_back(q);
    leaf(id, std::move(p));
  }
  void node(const std::string& id, PlayerId turn, std::vector<std::string> children) {
    RawNode n;
    n.id = id;
    n.turn = turn;
    n.children = std::move(children);
    desc_.nodes.push_back(std::move(n));
  }
  GameTree build(const std::string& root) {
    desc_.root = root;
    return GameTree::build(desc_);
  }

 private:
  GameDescription desc_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Adds centipede nodes under `prefix`; returns the root id.
std::string add_centipede(Builder& b, int t, const std::string& prefix) {
  b.node(prefix + "v", 1, {prefix + "S1", prefix + "C1"});
  b.leaf(prefix + "S1", {1, 0});
  std::int64_t x = 2;
  std::int64_t y = 1;
  for (int k = 1; k <= t; ++k) {
    const std::string c_odd = prefix + "C" + std::to_string(2 * k - 1);
    const std::string s_even = prefix + "S" + std::to_string(2 * k);
    const std::string c_even = prefix + "C" + std::to_string(2 * k);
    if (k == 1) {
      b.node(c_odd, 2, {s_even, c_even});
      b.leaf(s_even, {0, 2});
      if (t == 1) b.leaf(c_even, {2, 1});
      continue;
    }
    // Replace the previous continuation leaf C_{2k-2} with payoff (x, y).
    const std::string prev = prefix + "C" + std::to_string(2 * k - 2);
    const std::string s_odd = prefix + "S" + std::to_string(2 * k - 1);
    b.node(prev, 1, {s_odd, c_odd});
    b.leaf(s_odd, {x + 1, y});
    b.node(c_odd, 2, {s_even, c_even});
    b.leaf(s_even, {x, y + 3});
    x += 2;
    y += 2;
    if (k == t) b.leaf(c_even, {x, y});
  }
  return prefix + "v";
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<std::int64_t> shuffled_range(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int64_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (std::size_t k = n; k > 1; --k) std::swap(v[k - 1], v[draw(rng, k)]);
  return v;
}

struct Shape {
  std::vector<int> turn;  // 0 for leaves, preorder
  std::vector<std::vector<std::size_t>> children;
};

void grow(std::mt19937_64& rng, const FamilySpec& spec, Shape& shape, std::size_t v, int depth) {
  const bool internal = depth < spec.depth && (depth == 0 || draw(rng, 10) < 6);
  if (!internal) return;
  shape.turn[v] = static_cast<int>(1 + draw(rng, static_cast<std::uint64_t>(spec.players)));
  const auto count = 2 + draw(rng, static_cast<std::uint64_t>(spec.branching - 1));
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::size_t c = shape.turn.size();
    shape.turn.push_back(0);
    shape.children.emplace_back();
    shape.children[v].push_back(c);
    grow(rng, spec, shape, c, depth + 1);
  }
}

std::size_t joint_count(const Shape& shape, int players, std::size_t cap) {
  std::size_t total = 1;
  for (int i = 1; i <= players; ++i) {
    for (std::size_t v = 0; v < shape.turn.size(); ++v) {
      if (shape.turn[v] != i) continue;
      total *= shape.children[v].size();
      if (total > cap) return total;
    }
  }
  return total;
}

GameTree draw_game(std::mt19937_64& rng, const FamilySpec& spec, const Shape& shape) {
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < shape.turn.size(); ++v) {
    if (shape.turn[v] == 0) leaves.push_back(v);
  }
  const auto n = static_cast<std::size_t>(spec.players);
  std::vector<PayoffVector> payoffs(leaves.size(), PayoffVector(n));
  switch (spec.mode) {
    case PayoffMode::kArbitrary:
      for (auto& p : payoffs) {
        for (auto& q : p) q = static_cast<std::int64_t>(draw(rng, 7)) - 3;
      }
      break;
    case PayoffMode::kZeroSum:
      for (auto& p : payoffs) {
        p[0] = static_cast<std::int64_t>(draw(rng, 9)) - 4;
        p[1] = -p[0];
      }
      break;
    case PayoffMode::kGeneric:
      for (std::size_t c = 0; c < n; ++c) {
        const auto perm = shuffled_range(rng, leaves.size());
        // Distinct values in halves, so non-integral rationals show up too.
        for (std::size_t k = 0; k < leaves.size(); ++k) payoffs[k][c] = Rational(perm[k], 2);
      }
      break;
    case PayoffMode::kTdiPool: {
      const std::size_t pool_size = 1 + draw(rng, std::min<std::size_t>(leaves.size(), 5));
      std::vector<PayoffVector> pool(pool_size, PayoffVector(n));
      for (std::size_t c = 0; c < n; ++c) {
        const auto perm = shuffled_range(rng, pool_size);
        for (std::size_t k = 0; k < pool_size; ++k) pool[k][c] = perm[k];
      }
      for (auto& p : payoffs) p = pool[draw(rng, pool_size)];
      break;
    }
  }

  Builder b(spec.players);
  std::vector<std::size_t> leaf_slot(shape.turn.size(), 0);
  for (std::size_t k = 0; k < leaves.size(); ++k) leaf_slot[leaves[k]] = k;
  for (std::size_t v = 0; v < shape.turn.size(); ++v) {
    const std::string id = "n" + std::to_string(v);
    if (shape.turn[v] == 0) {
      b.leaf(id, payoffs[leaf_slot[v]]);
      continue;
    }
    std::vector<std::string> kids;
    for (std::size_t c : shape.children[v]) kids.push_back("n" + std::to_string(c));
    b.node(id, shape.turn[v], std::move(kids));
  }
  return b.build("n0");
}

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && ptr == text.data() + text.size(), "bad value for " + what + ": '" + std::string(text) + "'");
  return value;
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && ptr == text.data() + text.size(), "bad value for " + what + ": '" + std::string(text) + "'");
  return value;
}

}  // namespace

GameTree fig1() {
  Builder b(2);
  b.node("0", 1, {"2", "1"});
  b.node("2", 2, {"L", "R"});
  b.leaf("L", {0, 0});
  b.leaf("R", {2, 0});
  b.node("1", 1, {"C", "D"});
  b.leaf("C", {2, 0});
  b.leaf("D", {0, 0});
  return b.build("0");
}

GameTree single_node(int players) {
  require(players >= 1, "single_node needs at least one player");
  Builder b(players);
  b.leaf("v", PayoffVector(static_cast<std::size_t>(players), Rational(0)));
  return b.build("v");
}

GameTree centipede(int t) {
  require(t >= 1, "centipede needs t >= 1");
  Builder b(2);
  return b.build(add_centipede(b, t, ""));
}

GameTree chooser_centipede(int K) {
  require(K >= 1, "chooser_centipede needs K >= 1");
  Builder b(2);
  std::vector<std::string> roots;
  for (int t = 1; t <= K; ++t) roots.push_back("t" + std::to_string(t) + "_v");
  b.node("start", 2, roots);
  for (int t = 1; t <= K; ++t) add_centipede(b, t, "t" + std::to_string(t) + "_");
  return b.build("start");
}

GameTree ultimatum(int N) {
  require(N >= 1, "ultimatum needs N >= 1");
  Builder b(2);
  std::vector<std::string> offers;
  for (int x = 0; x <= N; ++x) offers.push_back("x" + std::to_string(x));
  b.node("r", 1, offers);
  for (int x = 0; x < N; ++x) b.leaf(offers[static_cast<std::size_t>(x)], {x, N - x});
  b.node(offers.back(), 2, {"L", "R"});
  b.leaf("L", {N, 0});
  b.leaf("R", {0, 0});
  return b.build("r");
}

GameTree fig3(int K) {
  require(K >= 2, "fig3 needs K >= 2");
  Builder b(2);
  b.node("r", 1, {"A", "B", "C"});
  b.leaf("A", {0, 0});
  b.leaf("B", {0, 1});
  std::vector<std::string> ks;
  for (int k = 0; k < K; ++k) ks.push_back("k" + std::to_string(k));
  b.node("C", 2, ks);
  for (int k = 0; k < K; ++k) b.leaf(ks[static_cast<std::size_t>(k)], {0, k});
  return b.build("r");
}

GameTree example6(int n) {
  require(n >= 2, "example6 needs n >= 2");
  Builder b(2);
  std::vector<std::string> cols;
  for (int c = 0; c < n; ++c) cols.push_back("c" + std::to_string(c));
  b.node("col", 2, cols);
  for (int c = 0; c < n; ++c) {
    std::vector<std::string> rows;
    for (int r = 0; r < n; ++r) rows.push_back(cols[static_cast<std::size_t>(c)] + "r" + std::to_string(r));
    b.node(cols[static_cast<std::size_t>(c)], 1, rows);
    for (int r = 0; r < n; ++r) {
      const bool hit = 1 <= c && c <= r;
      b.leaf(rows[static_cast<std::size_t>(r)], {hit ? 1 : 0, hit ? -1 : 0});
    }
  }
  return b.build("col");
}

GameTree zs_depth2() {
  Builder b(2);
  b.node("v", 1, {"L", "R"});
  b.leaf("L", {3, -3});
  b.node("R", 2, {"a", "b"});
  b.leaf("a", {1, -1});
  b.leaf("b", {4, -4});
  return b.build("v");
}

std::string to_string(PayoffMode mode) {
  switch (mode) {
    case PayoffMode::kZeroSum:
      return "zero_sum";
    case PayoffMode::kGeneric:
      return "generic";
    case PayoffMode::kTdiPool:
      return "tdi_pool";
    case PayoffMode::kArbitrary:
      return "arbitrary";
  }
  return "arbitrary";
}

PayoffMode parse_payoff_mode(std::string_view text) {
  for (auto m : {PayoffMode::kZeroSum, PayoffMode::kGeneric, PayoffMode::kTdiPool, PayoffMode::kArbitrary}) {
    if (text == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown payoff mode '" + std::string(text) + "'");
}

GameTree random_game(const FamilySpec& spec) {
  require(spec.players >= 1, "random_game needs at least one player");
  require(spec.depth >= 0, "random_game needs depth >= 0");
  require(spec.branching >= 2, "random_game needs branching >= 2");
  require(spec.max_joint >= 1, "random_game needs max_joint >= 1");
  require(spec.mode != PayoffMode::kZeroSum || spec.players == 2, "zero_sum needs two players");

  std::mt19937_64 rng(spec.seed);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Shape shape;
    shape.turn.push_back(0);
    shape.children.emplace_back();
    grow(rng, spec, shape, 0, 0);
    if (joint_count(shape, spec.players, spec.max_joint) > spec.max_joint) continue;
    return draw_game(rng, spec, shape);
  }
  throw std::invalid_argument("no draw within max_joint after " + std::to_string(kAttempts) + " attempts");
}

FamilySpec parse_family_spec(std::string_view params, std::uint64_t default_seed) {
  FamilySpec spec;
  spec.seed = default_seed;
  std::size_t pos = 0;
  while (pos < params.size()) {
    std::size_t comma = params.find(',', pos);
    if (comma == std::string_view::npos) comma = params.size();
    const std::string_view item = params.substr(pos, comma - pos);
    pos = comma + 1;
    const std::size_t eq = item.find('=');
    require(eq != std::string_view::npos, "expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string_view value = item.substr(eq + 1);
    if (key == "mode") {
      spec.mode = parse_payoff_mode(value);
    } else if (key == "players") {
      spec.players = parse_int(value, key);
    } else if (key == "depth") {
      spec.depth = parse_int(value, key);
    } else if (key == "branching") {
      spec.branching = parse_int(value, key);
    } else if (key == "seed") {
      spec.seed = parse_u64(value, key);
    } else if (key == "max_joint") {
      spec.max_joint = parse_u64(value, key);
    } else if (key == "tag") {
      spec.tags.emplace_back(value);
    } else {
      throw std::invalid_argument("unknown random parameter '" + key + "'");
    }
  }
  return spec;
}

GameTree from_name(std::string_view text, std::uint64_t default_seed) {
  const std::size_t colon = text.find(':');
  const std::string name(text.substr(0, colon));
  const std::string_view params = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  auto number = [&](const char* what) {
    require(!params.empty(), name + " needs a parameter, e.g. " + name + ":" + what);
    return parse_int(params, name);
  };
  auto none = [&] { require(params.empty(), name + " takes no parameters"); };

  if (name == "fig1") return none(), fig1();
  if (name == "zs_depth2") return none(), zs_depth2();
  if (name == "single_node") return single_node(params.empty() ? 2 : parse_int(params, name));
  if (name == "centipede") return centipede(number("2"));
  if (name == "chooser_centipede") return chooser_centipede(number("3"));
  if (name == "ultimatum") return ultimatum(number("100"));
  if (name == "fig3") return fig3(number("4"));
  if (name == "example6") return example6(number("5"));
  if (name == "random") return random_game(parse_family_spec(params, default_seed));
  throw std::invalid_argument("unknown game '" + name + "'");
}

}  // namespace iewds
