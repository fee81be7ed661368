#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "iewds/egt_format.hpp"
#include "iewds/generators.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "iewds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = iewds::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("iewds_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, SolveConstructiveCentipede) {
  const auto r = run({"solve", "--gen", "centipede:1", "--mode", "constructive"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["step_count"], 2);
  EXPECT_EQ(j["outcome"].dump(), R"(["1","0"])");
  EXPECT_EQ(j["spe_containment"], true);
}

TEST(Cli, SolveConstructiveRefusesFig1) {
  const auto r = run({"solve", "--gen", "fig1", "--mode", "constructive"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("NotInvariant"), std::string::npos);
  EXPECT_EQ(parse(r)["error"], "NotInvariant");
}

TEST(Cli, SolveMaximal) {
  const auto r = run({"solve", "--gen", "zs_depth2", "--mode", "maximal"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["rounds"], 2);
  EXPECT_EQ(j["trivial"], true);
  EXPECT_EQ(j["final"]["kept"].dump(), R"([["v->L"],["R->a"]])");
}

TEST(Cli, SequenceFile) {
  const auto seq = temp_file("seq.json", R"([[["0->1,1->D"], []], [[0, 1], []]])");
  const auto ok = run({"solve", "--gen", "fig1", "--mode", "sequence-file", "--seq", seq.string()});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(parse(ok)["final"]["kept"].dump(), R"([["0->1,1->C"],["2->L","2->R"]])");

  const auto bad = temp_file("bad.json", R"([[[], ["2->L"]]])");
  EXPECT_EQ(run({"solve", "--gen", "fig1", "--mode", "sequence-file", "--seq", bad.string()}).code, 3);

  const auto unknown = temp_file("unknown.json", R"([[["0->9"], []]])");
  EXPECT_EQ(run({"solve", "--gen", "fig1", "--mode", "sequence-file", "--seq", unknown.string()}).code, 2);
  EXPECT_EQ(run({"solve", "--gen", "fig1", "--mode", "sequence-file"}).code, 2);
}

TEST(Cli, Check) {
  const auto r = run({"check", "--gen", "fig3:4", "tdi"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["tdi"]["holds"], false);
  EXPECT_EQ(j["tdi"]["witness"]["r"], "r->A");
  EXPECT_EQ(j["tdi"]["witness"]["t"], "r->B");

  EXPECT_EQ(parse(run({"check", "--gen", "chooser_centipede:2", "spe-invariant"}))["spe_invariant"]["invariant"], true);

  const auto file = temp_file("z.egt", iewds::serialize_game(iewds::zs_depth2()));
  EXPECT_EQ(parse(run({"check", "--file", file.string(), "zero-sum"}))["zero_sum"]["holds"], true);
  EXPECT_EQ(run({"check", "--gen", "fig1", "nonsense"}).code, 2);
  EXPECT_EQ(run({"check", "--gen", "single_node:3", "sc"}).code, 3);
  const auto all = parse(run({"check", "--gen", "fig1"}));
  for (const char* key : {"tdi", "strictly_competitive", "zero_sum", "generic", "without_relevant_ties", "spe_invariant"}) {
    EXPECT_TRUE(all.contains(key)) << key;
  }
}

TEST(Cli, Oracle) {
  const auto fig = parse(run({"oracle", "--gen", "fig1"}));
  EXPECT_EQ(fig["ok"], true);
  EXPECT_EQ(fig["spe_invariance"]["algorithm"], false);
  EXPECT_EQ(fig["spe_invariance"]["brute_force"], false);

  const auto many = run({"oracle", "--gen", "random:mode=zero_sum,depth=3", "--count", "100", "--seed", "5", "--jobs", "4"});
  ASSERT_EQ(many.code, 0);
  const auto j = parse(many);
  EXPECT_EQ(j["failures"], 0);
  ASSERT_EQ(j["games"].size(), 100u);
  for (const auto& g : j["games"]) EXPECT_EQ(g["zero_sum_bound"]["trivial_within_m_minus_1"], true);

  const auto single = run({"oracle", "--gen", "random:mode=zero_sum,depth=3", "--count", "100", "--seed", "5"});
  EXPECT_EQ(single.out, many.out);
}

TEST(Cli, ExitCodes) {
  const auto bad = temp_file("bad.egt", "game 2\nleaf v payoffs 1\nroot v\n");
  EXPECT_EQ(run({"solve", "--file", bad.string()}).code, 2);
  const auto syntax = temp_file("syntax.egt", "game two\n");
  EXPECT_EQ(run({"solve", "--file", syntax.string()}).code, 2);
  EXPECT_EQ(run({"solve", "--gen", "nosuch"}).code, 2);
  EXPECT_EQ(run({"solve", "--gen", "fig1", "--file", bad.string()}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"table", "--gen", "fig1", "--cap-joint", "3"}).code, 4);
  EXPECT_EQ(run({"solve", "--gen", "ultimatum:5", "--mode", "constructive"}).code, 3);
}

TEST(Cli, GenAndTable) {
  const auto g = run({"gen", "--gen", "zs_depth2"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(iewds::parse_game(g.out), iewds::zs_depth2());
  const auto t = run({"table", "--gen", "fig1"});
  EXPECT_EQ(t.out.substr(0, t.out.find('\n')), R"(strategy,"2->L","2->R")");
  const auto text = run({"solve", "--gen", "fig1", "--format", "text"});
  EXPECT_NE(text.out.find("trivial = true"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--gen", "random:mode=generic,depth=3", "--seed", "11", "--mode", "constructive"},
      {"check", "--gen", "random:mode=tdi_pool,players=3", "--seed", "2"},
      {"spe", "--gen", "chooser_centipede:2"},
      {"gen", "--gen", "random:mode=arbitrary,depth=4", "--seed", "8"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
