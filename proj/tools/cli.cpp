#include "cli.hpp"

#include <atomic>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "iewds/constructive.hpp"
#include "iewds/egt_format.hpp"
#include "iewds/elimination.hpp"
#include "iewds/equilibrium.hpp"
#include "iewds/errors.hpp"
#include "iewds/game_classes.hpp"
#include "iewds/generators.hpp"
#include "iewds/json_export.hpp"

namespace iewds::cli {
namespace {

struct RunConfig {
  std::string gen;
  std::string file;
  std::string mode = "maximal";
  std::string seq;
  std::size_t cap_joint = kDefaultJointCap;
  std::size_t oracle_cap = 4096;
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t count = 1;
  bool compact = false;
  std::vector<std::string> properties;
};

// Bad input that is not tied to a library type (missing source, bad sequence file).
class UsageError : public Error {
 public:
  using Error::Error;
};

std::shared_ptr<const GameTree> load(const RunConfig& cfg, std::uint64_t seed) {
  if (cfg.gen.empty() == cfg.file.empty()) throw UsageError("give exactly one of --gen and --file");
  if (!cfg.gen.empty()) return std::make_shared<const GameTree>(from_name(cfg.gen, seed));
  return std::make_shared<const GameTree>(load_game_file(cfg.file));
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", out);
  } else {
    out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.format == "text") {
    flatten(j, "", out);
  } else {
    out << j.dump(2) << '\n';
  }
}

std::vector<StepSets> read_sequence(const std::string& path, const StrategicGame& game) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open sequence file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("sequence file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) throw UsageError("sequence file must hold a JSON list of steps");
  std::vector<StepSets> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Json& step = doc[k];
    const std::string where = "step " + std::to_string(k);
    if (!step.is_array() || step.size() != static_cast<std::size_t>(game.players())) {
      throw UsageError(where + " must list one strategy set per player");
    }
    StepSets sets = empty_sets(game.players());
    for (PlayerId i = 1; i <= game.players(); ++i) {
      const Json& names = step[static_cast<std::size_t>(i - 1)];
      if (!names.is_array()) throw UsageError(where + ": player " + std::to_string(i) + " set must be a list");
      for (const Json& name : names) {
        if (name.is_number_unsigned()) {
          sets[static_cast<std::size_t>(i - 1)].push_back(name.get<std::size_t>());
          continue;
        }
        if (!name.is_string()) throw UsageError(where + ": strategies are strings or indices");
        const auto idx = game.space(i).parse(game.tree(), name.get<std::string>());
        if (!idx) throw UsageError(where + ": '" + name.get<std::string>() + "' is not a strategy of player " + std::to_string(i));
        sets[static_cast<std::size_t>(i - 1)].push_back(*idx);
      }
    }
    out.push_back(std::move(sets));
  }
  return out;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  auto tree = load(cfg, cfg.seed);
  Json report;
  if (cfg.mode == "constructive") {
    SolveOptions options;
    options.cap = cfg.cap_joint;
    options.oracle_cap = cfg.oracle_cap;
    options.compact_noops = cfg.compact;
    report["mode"] = cfg.mode;
    report.update(solve_report_json(solve_constructive(tree, options)));
  } else {
    auto game = to_strategic(tree, cfg.cap_joint);
    const SubgameView full(game);
    EliminationTrace trace = cfg.mode == "maximal"
                                 ? iterate(full, std::numeric_limits<std::size_t>::max())
                                 : validate_sequence(full, read_sequence(cfg.seq, *game));
    report["mode"] = cfg.mode;
    report.update(trace_json(trace));
    if (cfg.mode == "maximal") report["rounds"] = trace.steps.size();
    report["trivial"] = !trace.final_view.empty() && is_trivial(trace.final_view);
  }
  emit(cfg, report, out);
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> kAll = {"tdi", "sc", "zero-sum", "generic", "wrt", "spe-invariant"};
  auto tree = load(cfg, cfg.seed);
  const auto props = cfg.properties.empty() ? kAll : cfg.properties;
  Json report;
  report["game_hash"] = game_hash(*tree);
  StrategicGamePtr game;
  auto strategic = [&]() -> const StrategicGamePtr& {
    if (!game) game = to_strategic(tree, cfg.cap_joint);
    return game;
  };
  for (const auto& p : props) {
    if (p == "tdi") {
      report["tdi"] = tdi_json(*strategic(), is_tdi(SubgameView(strategic())));
    } else if (p == "sc") {
      if (tree->players() != 2) throw PreconditionError("strict competitiveness needs a two-player game");
      report["strictly_competitive"] = competitive_json(*strategic(), is_strictly_competitive(SubgameView(strategic())));
    } else if (p == "zero-sum") {
      report["zero_sum"] = leaf_check_json(*tree, is_zero_sum(*tree));
    } else if (p == "generic") {
      report["generic"] = leaf_check_json(*tree, is_generic(*tree));
    } else if (p == "wrt") {
      report["without_relevant_ties"] = leaf_check_json(*tree, is_without_relevant_ties(*tree));
    } else if (p == "spe-invariant") {
      report["spe_invariant"] = spe_summary_json(*tree, spe_invariance(*tree));
    } else {
      throw UsageError("unknown property '" + p + "'");
    }
  }
  emit(cfg, report, out);
  return kOk;
}

// Per node: every SPE of the subgame rooted there pays the same and the same
// holds below. nullopt when some subgame exceeds the cap.
std::optional<std::vector<bool>> brute_force_invariance(const GameTree& game, std::size_t cap) {
  std::vector<bool> invariant(game.size(), false);
  for (NodeId v = game.size(); v-- > 0;) {
    auto sub = std::make_shared<const GameTree>(SubtreeHandle(game, v).materialize());
    StrategicGamePtr gamma;
    try {
      gamma = to_strategic(sub, cap);
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
    const auto spe = spe_enumerate(*gamma);
    bool local = !spe.empty();
    for (const auto& s : spe) local = local && gamma->payoff(s) == gamma->payoff(spe.front());
    for (NodeId c : game.children(v)) local = local && invariant[c];
    invariant[v] = local;
  }
  return invariant;
}

Json oracle_one(const RunConfig& cfg, const std::shared_ptr<const GameTree>& tree) {
  Json r;
  r["game_hash"] = game_hash(*tree);
  bool ok = true;

  const SpeSummary summary = spe_invariance(*tree);
  Json inv;
  inv["algorithm"] = summary.invariant();
  if (auto bf = brute_force_invariance(*tree, cfg.oracle_cap)) {
    std::size_t disagreements = 0;
    for (NodeId v = 0; v < tree->size(); ++v) disagreements += (*bf)[v] != summary.nodes[v].invariant;
    inv["brute_force"] = static_cast<bool>((*bf)[0]);
    inv["node_disagreements"] = disagreements;
    ok = ok && disagreements == 0;
  } else {
    inv["brute_force"] = "skipped: above oracle cap";
  }
  r["spe_invariance"] = std::move(inv);

  const bool bi_ok = is_spe(*tree, backward_induction(*tree));
  r["backward_induction_is_spe"] = bi_ok;
  ok = ok && bi_ok;

  if (summary.invariant()) {
    SolveOptions options;
    options.cap = cfg.cap_joint;
    options.oracle_cap = cfg.oracle_cap;
    const SolveReport rep = solve_constructive(tree, options);
    const bool trivial = is_trivial(rep.final_view);
    r["constructive"] = {{"trivial", trivial},
                         {"spe_containment", rep.spe_containment},
                         {"spe_exhaustive", rep.spe_exhaustive},
                         {"step_count", rep.step_count()},
                         {"outcome", payoff_json(rep.outcome)}};
    ok = ok && trivial && rep.spe_containment;
  } else {
    r["constructive"] = "skipped: not SPE-invariant";
  }

  if (tree->players() == 2 && is_zero_sum(*tree).holds) {
    auto game = to_strategic(tree, cfg.cap_joint);
    const SubgameView full(game);
    const std::size_t m = outcomes(full).size();
    const EliminationTrace t = iterate(full, m - 1);
    const bool trivial = is_trivial(t.final_view);
    r["zero_sum_bound"] = {{"outcomes", m}, {"rounds", t.steps.size()}, {"trivial_within_m_minus_1", trivial}};
    ok = ok && trivial;
  } else {
    r["zero_sum_bound"] = "skipped: not a two-player zero-sum game";
  }
  r["ok"] = ok;
  return r;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.count == 1) {
    const Json r = oracle_one(cfg, load(cfg, cfg.seed));
    emit(cfg, r, out);
    return r["ok"].get<bool>() ? kOk : kDivergence;
  }
  // Game k uses seed + k; results are collected in order, so --jobs does not
  // change the report.
  std::vector<Json> results(cfg.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cfg.count; k = next++) {
      try {
        results[k] = oracle_one(cfg, load(cfg, cfg.seed + k));
      } catch (const std::exception& e) {
        results[k] = {{"error", e.what()}, {"ok", false}};
      }
      results[k]["seed"] = cfg.seed + k;
    }
  };
  std::vector<std::thread> pool;
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.count)));
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t failures = 0;
  for (const auto& r : results) failures += !r["ok"].get<bool>();
  Json report;
  report["count"] = cfg.count;
  report["failures"] = failures;
  report["games"] = results;
  report["ok"] = failures == 0;
  emit(cfg, report, out);
  return failures == 0 ? kOk : kDivergence;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  out << serialize_game(*load(cfg, cfg.seed));
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  auto game = to_strategic(load(cfg, cfg.seed), cfg.cap_joint);
  if (cfg.format == "csv") {
    out << to_csv(*game);
    return kOk;
  }
  Json rows = Json::array();
  SubgameView(game).for_each_joint([&](const JointIndex& j) {
    Json joint = Json::array();
    for (std::size_t p = 0; p < j.size(); ++p) joint.push_back(game->render(static_cast<PlayerId>(p + 1), j[p]));
    rows.push_back({{"joint", std::move(joint)}, {"payoff", payoff_json(game->payoff(j))}});
  });
  emit(cfg, {{"game_hash", game_hash(game->tree())}, {"cells", std::move(rows)}}, out);
  return kOk;
}

int cmd_spe(const RunConfig& cfg, std::ostream& out) {
  auto tree = load(cfg, cfg.seed);
  auto game = to_strategic(tree, cfg.cap_joint);
  Json spe = Json::array();
  for (const auto& s : spe_enumerate(*game)) {
    Json joint = Json::array();
    for (std::size_t p = 0; p < s.size(); ++p) joint.push_back(game->render(static_cast<PlayerId>(p + 1), s[p]));
    spe.push_back({{"joint", std::move(joint)}, {"payoff", payoff_json(game->payoff(s))}});
  }
  Json bi = Json::array();
  for (const auto& s : backward_induction(*tree)) bi.push_back(game->render(s.player, game->space(s.player).encode(s)));
  Json report;
  report["game_hash"] = game_hash(*tree);
  report["spe"] = std::move(spe);
  report["backward_induction"] = std::move(bi);
  report["invariance"] = spe_summary_json(*tree, spe_invariance(*tree));
  emit(cfg, report, out);
  return kOk;
}

void error_report(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& what) {
  err << "iewds: " << kind << ": " << what << '\n';
  out << Json{{"error", kind}, {"message", what}}.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Iterated elimination of weakly dominated strategies on finite extensive games", "iewds"};
  app.require_subcommand(1);

  auto add_source = [&](CLI::App* sub) {
    auto* gen = sub->add_option("--gen", cfg.gen, "Built-in game, e.g. fig1, centipede:2, random:mode=zero_sum,seed=3");
    auto* file = sub->add_option("--file", cfg.file, "EGT game file")->check(CLI::ExistingFile);
    gen->excludes(file);
    sub->add_option("--seed", cfg.seed, "Seed for random games without an explicit seed");
    sub->add_option("--cap-joint", cfg.cap_joint, "Maximum number of joint strategies")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* solve = app.add_subcommand("solve", "Eliminate strategies: maximal rounds, the constructive sequence, or a given sequence");
  add_source(solve);
  add_format(solve, {"json", "text"});
  solve->add_option("--mode", cfg.mode, "maximal | constructive | sequence-file")
      ->check(CLI::IsMember({"maximal", "constructive", "sequence-file"}));
  solve->add_option("--seq", cfg.seq, "JSON list of steps, each a list of per-player strategy strings");
  solve->add_option("--oracle-cap", cfg.oracle_cap, "Enumerate SPE for the containment check up to this many joint strategies");
  solve->add_flag("--compact", cfg.compact, "Drop constructive steps that remove nothing");

  auto* check = app.add_subcommand("check", "Classify a game: tdi, sc, zero-sum, generic, wrt, spe-invariant");
  add_source(check);
  add_format(check, {"json", "text"});
  check->add_option("properties", cfg.properties, "Properties to check (default: all)");

  auto* oracle = app.add_subcommand("oracle", "Cross-check the algorithms against brute force");
  add_source(oracle);
  add_format(oracle, {"json", "text"});
  oracle->add_option("--count", cfg.count, "Number of games; game k uses seed + k")->check(CLI::PositiveNumber);
  oracle->add_option("--jobs", cfg.jobs, "Worker threads (across games only)")->check(CLI::PositiveNumber);
  oracle->add_option("--oracle-cap", cfg.oracle_cap, "Largest strategic form enumerated by brute force");

  auto* gen = app.add_subcommand("gen", "Print a built-in or random game as EGT text");
  add_source(gen);

  auto* table = app.add_subcommand("table", "Print the strategic form");
  add_source(table);
  add_format(table, {"csv", "json", "text"});

  auto* spe = app.add_subcommand("spe", "List subgame perfect equilibria and the invariance summary");
  add_source(spe);
  add_format(spe, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, help);
    if (code == 0) {
      out << help.str();
      return kOk;
    }
    err << help.str();
    return kParse;
  }
  if (table->parsed() && table->count("--format") == 0) cfg.format = "csv";
  if (solve->parsed() && cfg.mode == "sequence-file" && cfg.seq.empty()) {
    err << "iewds: --mode sequence-file needs --seq\n";
    return kParse;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (spe->parsed()) return cmd_spe(cfg, out);
  } catch (const NotInvariant& e) {
    error_report(out, err, "NotInvariant", e.what());
    return kPrecondition;
  } catch (const NotDominated& e) {
    error_report(out, err, "NotDominated", e.what());
    return kPrecondition;
  } catch (const IntermediateEmpty& e) {
    error_report(out, err, "IntermediateEmpty", e.what());
    return kPrecondition;
  } catch (const PreconditionError& e) {
    error_report(out, err, "PreconditionError", e.what());
    return kPrecondition;
  } catch (const CapExceeded& e) {
    error_report(out, err, "CapExceeded", e.what());
    return kCap;
  } catch (const ParseError& e) {
    error_report(out, err, "ParseError", e.what());
    return kParse;
  } catch (const ValidationError& e) {
    error_report(out, err, "ValidationError", e.what());
    return kParse;
  } catch (const LookupError& e) {
    error_report(out, err, "LookupError", e.what());
    return kParse;
  } catch (const UsageError& e) {
    error_report(out, err, "UsageError", e.what());
    return kParse;
  } catch (const std::invalid_argument& e) {
    error_report(out, err, "UsageError", e.what());
    return kParse;
  } catch (const std::exception& e) {
    error_report(out, err, "InternalError", e.what());
    return kDivergence;
  }
  return kParse;
}

}  // namespace iewds::cli
