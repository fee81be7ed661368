#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "iewds/errors.hpp"
#include "iewds/generators.hpp"
#include "iewds/strategic.hpp"
#include "oracle.hpp"

using namespace iewds;

TEST(StrategySpace, Fig1Order) {
  const auto g = fig1();
  const StrategySpace s1(g, 1);
  ASSERT_EQ(s1.size(), 4u);
  EXPECT_EQ(s1.render(g, 0), "0->2,1->C");
  EXPECT_EQ(s1.render(g, 1), "0->2,1->D");
  EXPECT_EQ(s1.render(g, 2), "0->1,1->C");
  EXPECT_EQ(s1.render(g, 3), "0->1,1->D");
  const StrategySpace s2(g, 2);
  EXPECT_EQ(s2.render(g, 0), "2->L");
  EXPECT_EQ(s2.render(g, 1), "2->R");
  EXPECT_EQ(s1.parse(g, "0->1,1->D"), std::optional<std::size_t>(3));
  EXPECT_FALSE(s2.parse(g, "2->Q").has_value());
}

TEST(StrategySpace, SilentPlayerHasEmptyStrategy) {
  const auto g = single_node(3);
  const StrategySpace s(g, 3);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.render(g, 0), "");
}

TEST(StrategySpace, EncodeDecodeMatchesOracleOrder) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = fixtures::random(seed, PayoffMode::kArbitrary, 3, 3, 3, 4096);
    const oracle::Table t(g);
    for (PlayerId i = 1; i <= 3; ++i) {
      const StrategySpace s(g, i);
      ASSERT_EQ(s.size(), t.count(i));
      for (std::size_t k = 0; k < s.size(); ++k) {
        const auto st = s.decode(k);
        EXPECT_EQ(st.choices, t.choice(i, k));
        EXPECT_EQ(s.encode(st), k);
        EXPECT_EQ(s.parse(g, s.render(g, k)), std::optional<std::size_t>(k));
      }
    }
  }
}

TEST(StrategicGame, LeafTableMatchesOracle) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const int players = 2 + static_cast<int>(seed % 2);
    const auto g = fixtures::random(seed, PayoffMode::kArbitrary, players, 3, 3, 4096);
    const auto gamma = to_strategic(g);
    const oracle::Table t(g);
    std::size_t n = 0;
    for (const auto& j : t.all_joints()) {
      ASSERT_EQ(gamma->leaf(j), t.leaf(j));
      ++n;
      const auto decoded = gamma->decode(j);
      EXPECT_EQ(leaf(g, decoded), t.leaf(j));
      const auto path = play(g, decoded);
      EXPECT_EQ(path.front(), g.root());
      EXPECT_EQ(path.back(), t.leaf(j));
    }
    EXPECT_EQ(gamma->joint_count(), n);
    for (std::size_t f = 0; f < gamma->joint_count(); ++f) EXPECT_EQ(gamma->flat_index(gamma->joint_at(f)), f);
  }
}

TEST(StrategicGame, Fig1Csv) {
  const auto csv = to_csv(*to_strategic(fig1()));
  EXPECT_EQ(csv,
            "strategy,\"2->L\",\"2->R\"\n"
            "\"0->2,1->C\",\"(0,0)\",\"(2,0)\"\n"
            "\"0->2,1->D\",\"(0,0)\",\"(2,0)\"\n"
            "\"0->1,1->C\",\"(2,0)\",\"(2,0)\"\n"
            "\"0->1,1->D\",\"(0,0)\",\"(0,0)\"\n");
}

TEST(StrategicGame, CapExceeded) {
  EXPECT_THROW(to_strategic(fig1(), 7), CapExceeded);
  EXPECT_NO_THROW(to_strategic(fig1(), 8));
  EXPECT_THROW(StrategySpace(example6(5), 1, 1000), CapExceeded);
}

TEST(SubgameView, Basics) {
  const auto gamma = to_strategic(fig1());
  const SubgameView full(gamma);
  EXPECT_EQ(full.joint_count(), 8u);
  EXPECT_FALSE(full.empty());
  EXPECT_EQ(outcomes(full).size(), 2u);
  EXPECT_FALSE(is_trivial(full));

  const SubgameView v(gamma, {{2, 2}, {1, 0}});
  EXPECT_EQ(v.kept(1), std::vector<std::size_t>{2});
  EXPECT_EQ(v.kept(2), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(is_trivial(v));
  EXPECT_TRUE(v.contains(std::vector<std::size_t>{2, 1}));
  EXPECT_FALSE(v.contains(std::vector<std::size_t>{0, 1}));

  const SubgameView e(gamma, {{}, {0}});
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(e.joint_count(), 0u);
  EXPECT_THROW(is_trivial(e), PreconditionError);
  EXPECT_THROW(SubgameView(gamma, {{4}, {0}}), LookupError);
}

TEST(SubgameView, IterationOrders) {
  const auto gamma = to_strategic(fixtures::random(3, PayoffMode::kArbitrary, 3, 3, 3, 4096));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    std::vector<std::vector<std::size_t>> kept(3);
    for (PlayerId i = 1; i <= 3; ++i) {
      for (std::size_t s = 0; s < gamma->strategy_count(i); ++s) {
        if (rng() % 2 == 0) kept[static_cast<std::size_t>(i - 1)].push_back(s);
      }
      if (kept[static_cast<std::size_t>(i - 1)].empty()) kept[static_cast<std::size_t>(i - 1)].push_back(0);
    }
    const SubgameView view(gamma, kept);
    std::vector<oracle::Joint> seen;
    view.for_each_joint([&](const JointIndex& j) { seen.push_back(j); });
    EXPECT_EQ(seen, oracle::joints(kept));
    for (PlayerId i = 1; i <= 3; ++i) {
      std::size_t n = 0;
      view.for_each_opponent_profile(i, [&](const JointIndex& j) {
        EXPECT_TRUE(view.contains(j));
        ++n;
      });
      EXPECT_EQ(n, view.joint_count() / view.kept(i).size());
    }
  }
}

TEST(SubgameView, Intersection) {
  const auto gamma = to_strategic(fig1());
  const std::vector<SubgameView> vs{SubgameView(gamma, {{0, 1, 2}, {0, 1}}), SubgameView(gamma, {{1, 2, 3}, {1}})};
  const auto x = intersect_views(vs);
  EXPECT_EQ(x, SubgameView(gamma, {{1, 2}, {1}}));
  const std::vector<SubgameView> mixed{SubgameView(gamma), SubgameView(to_strategic(fig1()))};
  EXPECT_THROW(intersect_views(mixed), PreconditionError);
  EXPECT_THROW(intersect_views(std::span<const SubgameView>()), PreconditionError);
}
