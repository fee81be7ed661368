#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "iewds/constructive.hpp"
#include "iewds/elimination.hpp"
#include "iewds/equilibrium.hpp"
#include "iewds/game_classes.hpp"

namespace iewds {

// Key order is insertion order, so serialised reports are stable.
using Json = nlohmann::ordered_json;

// FNV-1a 64 of the EGT serialisation, as 16 hex digits.
std::string game_hash(const GameTree& game);

Json payoff_json(const PayoffVector& payoffs);  // ["1","-1/2"]
Json view_json(const SubgameView& view);        // {"kept": [[...], ...], "outcomes": [...]}
Json witness_json(const StrategicGame& game, const DominanceWitness& witness);
Json step_json(const StrategicGame& game, const EliminationStep& step);

// {"game_hash", "steps": [{"removed": [...], "disregarded": [...]}], "final": view}
Json trace_json(const EliminationTrace& trace);

// trace_json plus outcome, spe_containment, spe_exhaustive and step_count.
Json solve_report_json(const SolveReport& report);

Json spe_summary_json(const GameTree& game, const SpeSummary& summary);
Json tdi_json(const StrategicGame& game, const TdiResult& result);
Json competitive_json(const StrategicGame& game, const CompetitiveResult& result);
Json leaf_check_json(const GameTree& game, const LeafCheck& check);
Json class_report_json(const StrategicGame& game, const ClassReport& report);

}  // namespace iewds
