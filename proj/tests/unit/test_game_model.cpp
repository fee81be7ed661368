#include <gtest/gtest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "iewds/egt_format.hpp"
#include "iewds/errors.hpp"
#include "iewds/game_tree.hpp"
#include "iewds/generators.hpp"

using namespace iewds;
using Kind = Violation::Kind;

namespace {

RawNode leaf(std::string id, PayoffVector p) {
  RawNode n;
  n.id = std::move(id);
  n.leaf = true;
  n.payoffs = std::move(p);
  return n;
}

RawNode inner(std::string id, PlayerId turn, std::vector<std::string> children) {
  RawNode n;
  n.id = std::move(id);
  n.turn = turn;
  n.children = std::move(children);
  return n;
}

GameDescription small() {
  GameDescription d;
  d.players = 2;
  d.root = "r";
  d.nodes = {inner("r", 1, {"a", "b"}), leaf("a", {1, 0}), inner("b", 2, {"c", "e"}), leaf("c", {0, 1}),
             leaf("e", {2, 2})};
  return d;
}

}  // namespace

TEST(Validate, AcceptsWellFormed) { EXPECT_TRUE(validate(small()).ok()); }

TEST(Validate, ReportsEachKind) {
  {
    auto d = small();
    d.players = 0;
    EXPECT_TRUE(validate(d).has(Kind::kBadPlayerCount));
  }
  {
    auto d = small();
    d.root = "zz";
    EXPECT_TRUE(validate(d).has(Kind::kMissingRoot));
  }
  {
    auto d = small();
    d.nodes.push_back(leaf("a", {0, 0}));
    EXPECT_TRUE(validate(d).has(Kind::kDuplicateId));
  }
  {
    auto d = small();
    d.nodes[2].children.push_back("nowhere");
    EXPECT_TRUE(validate(d).has(Kind::kDanglingChild));
  }
  {
    auto d = small();
    d.nodes[2].children.clear();
    EXPECT_TRUE(validate(d).has(Kind::kEmptyChildren));
  }
  {
    auto d = small();
    d.nodes[2].turn = 3;
    EXPECT_TRUE(validate(d).has(Kind::kBadTurn));
  }
  {
    auto d = small();
    d.nodes[1].payoffs = {1};
    EXPECT_TRUE(validate(d).has(Kind::kPayoffArity));
  }
  {
    auto d = small();
    d.nodes[0].children.push_back("c");
    EXPECT_TRUE(validate(d).has(Kind::kMultipleParents));
  }
  {
    auto d = small();
    d.nodes[2].children.push_back("r");
    EXPECT_TRUE(validate(d).has(Kind::kRootHasParent));
  }
  {
    auto d = small();
    d.nodes.push_back(inner("x", 1, {"y"}));
    d.nodes.push_back(inner("y", 2, {"x"}));
    const auto report = validate(d);
    EXPECT_TRUE(report.has(Kind::kCycle));
    EXPECT_FALSE(report.ok());
  }
  {
    auto d = small();
    d.nodes.push_back(leaf("orphan", {0, 0}));
    EXPECT_TRUE(validate(d).has(Kind::kUnreachable));
  }
}

TEST(Validate, SummaryJoinsMessages) {
  auto d = small();
  d.nodes[1].payoffs = {1};
  d.nodes.push_back(leaf("orphan", {0, 0}));
  const auto report = validate(d);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_NE(report.summary().find("; "), std::string::npos);
  EXPECT_THROW(GameTree::build(d), ValidationError);
}

TEST(GameTree, PreorderLayout) {
  const auto g = GameTree::build(small());
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.label(0), "r");
  EXPECT_EQ(g.label(1), "a");
  EXPECT_EQ(g.label(2), "b");
  EXPECT_EQ(g.subtree_end(2), 5u);
  EXPECT_EQ(g.subtree_end(0), 5u);
  EXPECT_EQ(g.parent(3), std::optional<NodeId>(2));
  EXPECT_FALSE(g.parent(0).has_value());
  EXPECT_EQ(g.child_position(4), 1u);
  EXPECT_EQ(g.decision_nodes(1), std::vector<NodeId>{0});
  EXPECT_EQ(g.decision_nodes(2), std::vector<NodeId>{2});
  EXPECT_EQ(g.leaves(), (std::vector<NodeId>{1, 3, 4}));
  EXPECT_EQ(g.at("e"), 4u);
  EXPECT_THROW(g.at("nope"), LookupError);
}

TEST(GameTree, SubgameMaterialize) {
  const auto g = fig1();
  const auto h = subgame(g, "1");
  EXPECT_EQ(h.size(), 3u);
  EXPECT_TRUE(h.contains(g.at("C")));
  EXPECT_FALSE(h.contains(g.at("L")));
  const auto m = h.materialize();
  EXPECT_EQ(m.players(), 2);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.label(0), "1");
  EXPECT_EQ(m.turn(0), 1);
  EXPECT_EQ(m.payoffs(1), (PayoffVector{2, 0}));
  EXPECT_TRUE(m.decision_nodes(2).empty());
}

TEST(GameTree, Rank) {
  EXPECT_EQ(rank(single_node()), 0u);
  EXPECT_EQ(rank(fig1()), 2u);
  EXPECT_EQ(rank(centipede(2)), 4u);
  const auto g = fig1();
  EXPECT_EQ(rank(subgame(g, "2")), 1u);
  EXPECT_EQ(rank(subgame(g, "L")), 0u);
}

TEST(GameTree, DescribeRoundTrips) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = fixtures::random(seed, PayoffMode::kArbitrary, 2 + static_cast<int>(seed % 2));
    EXPECT_EQ(GameTree::build(g.describe()), g);
  }
}

TEST(Egt, ParsesFig1Text) {
  const std::string text =
      "# figure one\n"
      "game 2\n"
      "node 0 player 1 children 2 1\n"
      "node 2 player 2 children L R\n"
      "leaf L payoffs 0 0\n"
      "leaf R payoffs 2 0\n"
      "node 1 player 1 children C D\n"
      "leaf C payoffs 2 0\n"
      "leaf D payoffs 0 0\n"
      "root 0\n";
  EXPECT_EQ(parse_game(text), fig1());
}

TEST(Egt, RationalPayoffs) {
  const auto g = parse_game("game 2\nleaf v payoffs 5/2 -1/4\nroot v\n");
  EXPECT_EQ(g.payoffs(0), (PayoffVector{Rational(5, 2), Rational(-1, 4)}));
  EXPECT_EQ(serialize_game(g), "game 2\nleaf v payoffs 5/2 -1/4\nroot v\n");
}

TEST(Egt, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const auto mode = static_cast<PayoffMode>(rng() % 4);
    const int players = mode == PayoffMode::kZeroSum ? 2 : 2 + static_cast<int>(rng() % 2);
    const auto g = fixtures::random(rng(), mode, players, 4, 3, 4096);
    const auto text = serialize_game(g);
    const auto back = parse_game(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_game(back), text);
  }
}

TEST(Egt, ParseErrorsCarryLines) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_game(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 9999;
  };
  EXPECT_EQ(line_of("gme 2\nroot v\n"), 1u);
  EXPECT_EQ(line_of("game 2\nleaf v payoffs 1 x\nroot v\n"), 2u);
  EXPECT_EQ(line_of("game 2\n\nnode r player one children a\nroot r\n"), 3u);
  EXPECT_EQ(line_of("game 2\nleaf v payoffs 0 0\nroot v\nleaf w payoffs 0 0\n"), 4u);
  EXPECT_EQ(line_of("game 2\nleaf v payoffs 0 0\n"), 2u);
  EXPECT_EQ(line_of("game 2\nbranch v\nroot v\n"), 2u);
}

TEST(Egt, StructuralErrorsAreValidationErrors) {
  EXPECT_THROW(parse_game("game 2\nnode r player 1 children a b\nleaf a payoffs 0 0\nroot r\n"), ValidationError);
  EXPECT_THROW(parse_game("game 2\nleaf a payoffs 0 0 0\nroot a\n"), ValidationError);
  EXPECT_THROW(load_game_file("/nonexistent/game.egt"), LookupError);
}
