#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iewds/game_tree.hpp"

namespace iewds {

// fig1: player 1 picks A (node "2", player 2: L (0,0), R (2,0)) or
// B (node "1", player 1: C (2,0), D (0,0)).
GameTree fig1();

// A lone leaf with zero payoffs.
GameTree single_node(int players = 2);

// Centipede with 2t periods, t >= 1. Each extension replaces the last
// continuation leaf (x,y) by S (x+1,y) and a player-2 node with S (x,y+3),
// C (x+2,y+2).
GameTree centipede(int t);

// Player 2 first picks one of centipede(1..K); K >= 1. Finite shadow of the
// game where player 2 picks any even number of periods.
GameTree chooser_centipede(int K);

// Player 1 offers x in 0..N-1 (leaf (x, N-x)) or N, after which player 2
// picks L (N,0) or R (0,0); N >= 1. The continuum game has the single SPE
// (100,L); on the grid (99,R) is a second one, so SPE-invariance fails.
GameTree ultimatum(int N);

// fig3 truncated: player 1 picks A (0,0), B (0,1) or C, where player 2
// picks a leaf (0,k), k < K; K >= 2. Truncation restores an SPE; the game
// stays non-TDI and is not SPE-invariant.
GameTree fig3(int K);

// n x n corner of the Example 6 table (row r, column c, outcome (1,-1) iff
// 1 <= c <= r, else (0,0)), as player 2 choosing the column at the root and
// player 1 the row below; n >= 2. Unlike the infinite table, the last row is
// undominated, so H^1 is trivial rather than empty.
GameTree example6(int n);

// Z: player 1 picks L (3,-3) or R, where player 2 picks a (1,-1) or b (4,-4).
GameTree zs_depth2();

enum class PayoffMode { kZeroSum, kGeneric, kTdiPool, kArbitrary };

std::string to_string(PayoffMode mode);
PayoffMode parse_payoff_mode(std::string_view text);  // throws std::invalid_argument

struct FamilySpec {
  std::string name = "random";
  PayoffMode mode = PayoffMode::kArbitrary;
  int players = 2;
  int depth = 3;      // maximal rank
  int branching = 3;  // maximal number of children, at least 2
  std::uint64_t seed = 0;
  // Draws whose strategic form exceeds this many joint strategies are
  // rejected and redrawn from the same stream.
  std::size_t max_joint = 4096;
  std::vector<std::string> tags;
};

// Seeded random tree. zero_sum needs two players and sets p2 = -p1; generic
// makes every coordinate injective on the leaves; tdi_pool draws each leaf
// from a pool of vectors that differ in every coordinate, which implies TDI.
// The same spec always yields the same tree. Throws std::invalid_argument for
// an invalid spec.
GameTree random_game(const FamilySpec& spec);

// Builds a fixture from "name" or "name:params": fig1, single_node[:n],
// centipede:t, chooser_centipede:K, ultimatum:N, fig3:K, example6:n,
// zs_depth2, random:mode=..,depth=..,branching=..,players=..,seed=..,max_joint=..
// A random spec without seed= uses `default_seed`. Throws
// std::invalid_argument for unknown names or bad parameters.
GameTree from_name(std::string_view text, std::uint64_t default_seed = 0);
FamilySpec parse_family_spec(std::string_view params, std::uint64_t default_seed = 0);

}  // namespace iewds
