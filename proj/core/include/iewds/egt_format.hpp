#pragma once

#include <string>
#include <string_view>

#include "iewds/game_tree.hpp"

namespace iewds {

// EGT is a line-based text format ('#' starts a comment):
//
//   game <n>
//   node <id> player <i> children <id> <id> ...
//   leaf <id> payoffs <q1> ... <qn>
//   root <id>
//
// Payoffs are integers or a/b. Ids are tokens of [A-Za-z0-9_].

// Syntax only; no tree validation. Throws ParseError.
GameDescription parse_description(std::string_view text);

// Throws ParseError on syntax errors and ValidationError on structural ones
// (dangling child, duplicate id, payoff arity, cycle, ...).
GameTree parse_game(std::string_view text);

// Nodes are emitted in preorder, root line last.
std::string serialize_game(const GameTree& game);

GameTree load_game_file(const std::string& path);

}  // namespace iewds
