#include <gtest/gtest.h>

#include "iewds/egt_format.hpp"
#include "iewds/generators.hpp"
#include "iewds/json_export.hpp"

using namespace iewds;

namespace {

// Plain FNV-1a 64 of a byte string, for an independent hash check.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

TEST(Json, GameHash) {
  const auto g = fig1();
  const auto h = game_hash(g);
  ASSERT_EQ(h.size(), 16u);
  EXPECT_EQ(std::stoull(h, nullptr, 16), fnv1a(serialize_game(g)));
  EXPECT_NE(h, game_hash(zs_depth2()));
}

TEST(Json, PayoffStrings) {
  EXPECT_EQ(payoff_json({Rational(1), Rational(-1, 2)}).dump(), R"(["1","-1/2"])");
}

TEST(Json, TraceShape) {
  const auto gamma = to_strategic(fig1());
  const auto tr = iterate(SubgameView(gamma), 5);
  const auto j = trace_json(tr);
  EXPECT_EQ(j["game_hash"], game_hash(fig1()));
  ASSERT_EQ(j["steps"].size(), 1u);
  const auto& first = j["steps"][0]["removed"][0];
  EXPECT_EQ(first["player"], 1);
  EXPECT_EQ(first["strategy"], "0->2,1->C");
  EXPECT_EQ(first["dominator"], "0->1,1->C");
  EXPECT_EQ(first["strict_profile"].dump(), R"(["0->2,1->C","2->L"])");
  EXPECT_EQ(j["final"].dump(), R"({"kept":[["0->1,1->C"],["2->L","2->R"]],"outcomes":[["2","0"]]})");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"game_hash", "steps", "final"}));
}

TEST(Json, SolveReport) {
  const auto j = solve_report_json(solve_constructive(centipede(1)));
  EXPECT_EQ(j["step_count"], 2);
  EXPECT_EQ(j["outcome"].dump(), R"(["1","0"])");
  EXPECT_EQ(j["spe_containment"], true);
}

TEST(Json, Classes) {
  const auto g = fig3(4);
  const auto gamma = to_strategic(g);
  const auto j = class_report_json(*gamma, classify(g));
  EXPECT_EQ(j["tdi"]["holds"], false);
  EXPECT_EQ(j["tdi"]["witness"]["r"], "r->A");
  EXPECT_EQ(j["tdi"]["witness"]["outcome_r"].dump(), R"(["0","0"])");
  EXPECT_EQ(j["tdi"]["witness"]["outcome_t"].dump(), R"(["0","1"])");
  const auto f = fig1();
  const auto w = leaf_check_json(f, is_without_relevant_ties(f));
  EXPECT_EQ(w["holds"], false);
  EXPECT_EQ(w["witness"]["nodes"][0], "0");
  EXPECT_EQ(w["witness"]["player"], 1);
}

TEST(Json, SpeSummary) {
  const auto g = fig1();
  const auto j = spe_summary_json(g, spe_invariance(g));
  EXPECT_EQ(j["invariant"], false);
  EXPECT_EQ(j["nodes"]["1"]["unique_payoff"].dump(), R"(["2","0"])");
  EXPECT_FALSE(j["nodes"]["2"].contains("unique_payoff"));
}
