#include "iewds/json_export.hpp"

#include <cstdio>

#include "iewds/egt_format.hpp"

namespace iewds {
namespace {

Json joint_json(const StrategicGame& game, const JointIndex& joint) {
  Json out = Json::array();
  for (std::size_t p = 0; p < joint.size(); ++p) out.push_back(game.render(static_cast<PlayerId>(p + 1), joint[p]));
  return out;
}

}  // namespace

std::string game_hash(const GameTree& game) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_game(game)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json payoff_json(const PayoffVector& payoffs) {
  Json out = Json::array();
  for (const auto& q : payoffs) out.push_back(to_string(q));
  return out;
}

Json view_json(const SubgameView& view) {
  Json kept = Json::array();
  for (PlayerId i = 1; i <= view.players(); ++i) {
    Json list = Json::array();
    for (std::size_t s : view.kept(i)) list.push_back(view.base().render(i, s));
    kept.push_back(std::move(list));
  }
  Json outs = Json::array();
  for (const auto& o : outcomes(view)) outs.push_back(payoff_json(o));
  return {{"kept", std::move(kept)}, {"outcomes", std::move(outs)}};
}

Json witness_json(const StrategicGame& game, const DominanceWitness& w) {
  return {{"player", w.player},
          {"strategy", game.render(w.player, w.dominated)},
          {"dominator", game.render(w.player, w.dominator)},
          {"strict_profile", joint_json(game, w.strict_at)}};
}

Json step_json(const StrategicGame& game, const EliminationStep& step) {
  Json removed = Json::array();
  for (const auto& w : step.witnesses) removed.push_back(witness_json(game, w));
  Json disregarded = Json::array();
  for (std::size_t p = 0; p < step.disregarded.size(); ++p) {
    const auto i = static_cast<PlayerId>(p + 1);
    for (std::size_t s : step.disregarded[p]) disregarded.push_back({{"player", i}, {"strategy", game.render(i, s)}});
  }
  return {{"removed", std::move(removed)}, {"disregarded", std::move(disregarded)}};
}

Json trace_json(const EliminationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back(step_json(trace.base(), s));
  Json out;
  out["game_hash"] = game_hash(trace.base().tree());
  out["steps"] = std::move(steps);
  out["final"] = view_json(trace.final_view);
  return out;
}

Json solve_report_json(const SolveReport& report) {
  Json out = trace_json(report.trace);
  out["outcome"] = payoff_json(report.outcome);
  out["spe_containment"] = report.spe_containment;
  out["spe_exhaustive"] = report.spe_exhaustive;
  out["step_count"] = report.step_count();
  return out;
}

Json spe_summary_json(const GameTree& game, const SpeSummary& summary) {
  Json nodes = Json::object();
  for (NodeId v = 0; v < game.size(); ++v) {
    const auto& n = summary.nodes[v];
    Json entry;
    entry["exists"] = n.exists;
    entry["invariant"] = n.invariant;
    if (n.unique_payoff) entry["unique_payoff"] = payoff_json(*n.unique_payoff);
    nodes[game.label(v)] = std::move(entry);
  }
  Json out;
  out["invariant"] = summary.invariant();
  out["nodes"] = std::move(nodes);
  return out;
}

Json leaf_check_json(const GameTree& game, const LeafCheck& check) {
  Json out;
  out["holds"] = check.holds;
  if (!check.holds) {
    Json nodes = Json::array();
    for (NodeId v : check.witness) nodes.push_back(game.label(v));
    out["witness"] = {{"nodes", nodes}};
    if (check.player != 0) out["witness"]["player"] = check.player;
  }
  return out;
}

Json tdi_json(const StrategicGame& game, const TdiResult& result) {
  Json tdi;
  tdi["holds"] = result.holds;
  if (const auto& w = result.witness) {
    tdi["witness"] = {{"player", w->player},
                      {"r", game.render(w->player, w->r)},
                      {"t", game.render(w->player, w->t)},
                      {"profile", joint_json(game, w->profile)},
                      {"outcome_r", payoff_json(w->outcome_r)},
                      {"outcome_t", payoff_json(w->outcome_t)}};
  }
  return tdi;
}

Json competitive_json(const StrategicGame& game, const CompetitiveResult& result) {
  Json sc;
  sc["holds"] = result.holds;
  if (const auto& w = result.witness) {
    sc["witness"] = {{"first", joint_json(game, w->first)},
                     {"second", joint_json(game, w->second)},
                     {"first_payoff", payoff_json(game.payoff(w->first))},
                     {"second_payoff", payoff_json(game.payoff(w->second))}};
  }
  return sc;
}

Json class_report_json(const StrategicGame& game, const ClassReport& report) {
  Json out;
  out["tdi"] = tdi_json(game, report.tdi);
  if (report.strictly_competitive) {
    out["strictly_competitive"] = competitive_json(game, *report.strictly_competitive);
  } else {
    out["strictly_competitive"] = nullptr;
  }
  out["zero_sum"] = leaf_check_json(game.tree(), report.zero_sum);
  out["generic"] = leaf_check_json(game.tree(), report.generic);
  out["without_relevant_ties"] = leaf_check_json(game.tree(), report.without_relevant_ties);
  return out;
}

}  // namespace iewds
