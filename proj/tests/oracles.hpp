#pragma once

// Test-only reference computations, kept independent of the library's value
// recursion: expectations are accumulated forward along root-to-leaf paths,
// best responses by exhaustive enumeration of pure strategies.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "forel/game.hpp"

namespace forel::oracle {

// Forward path-sum expectation of every player's total reward.
inline void walk(const GameTree& game, const Policy& policy, int h, double prob,
                 std::vector<double>& totals) {
  const GameNode& node = game.node(h);
  for (int a = 0; a < node.num_actions(); ++a) {
    double p = node.player == kChance ? node.chance_probs[a]
                                      : policy.probs[node.player][node.infostate][a];
    double q = prob * p;
    for (Player i = 0; i < game.num_players(); ++i) totals[i] += q * game.reward(h, a, i);
    walk(game, policy, node.children[a], q, totals);
  }
}

inline std::vector<double> expectation(const GameTree& game, const Policy& policy) {
  std::vector<double> totals(game.num_players(), 0.0);
  walk(game, policy, game.root(), 1.0, totals);
  return totals;
}

// Number of pure strategies of a player (product of action counts).
inline long num_pure(const GameTree& game, Player i) {
  long n = 1;
  for (int x = 0; x < game.num_infostates(i); ++x) n *= game.num_actions(i, x);
  return n;
}

// The k-th pure strategy in mixed-radix order over the infostates.
inline Policy pure_strategy(const GameTree& game, const Policy& base, Player i, long k) {
  Policy out = base;
  for (int x = 0; x < game.num_infostates(i); ++x) {
    int na = game.num_actions(i, x);
    int a = static_cast<int>(k % na);
    k /= na;
    auto& block = out.probs[i][x];
    std::fill(block.begin(), block.end(), 0.0);
    block[a] = 1.0;
  }
  return out;
}

// Max over all pure strategies of player i of the forward expectation.
inline double brute_force_best_response(const GameTree& game, const Policy& policy, Player i) {
  double best = -1e300;
  long n = num_pure(game, i);
  for (long k = 0; k < n; ++k) {
    double v = expectation(game, pure_strategy(game, policy, i, k))[i];
    if (v > best) best = v;
  }
  return best;
}

// Fictitious play on a zero-sum matrix (row maximizer); returns lower and
// upper bounds on the game value after `iters` rounds.
struct FpBounds {
  double lower, upper;
};

inline FpBounds fictitious_play_bounds(const std::vector<std::vector<double>>& a, int iters) {
  size_t rows = a.size(), cols = a[0].size();
  std::vector<double> row_counts(rows, 0.0), col_counts(cols, 0.0);
  std::vector<double> row_payoff(rows, 0.0), col_payoff(cols, 0.0);
  size_t r = 0, c = 0;
  double lower = -1e300, upper = 1e300;
  for (int t = 0; t < iters; ++t) {
    row_counts[r] += 1.0;
    col_counts[c] += 1.0;
    for (size_t i = 0; i < rows; ++i) row_payoff[i] += a[i][c];
    for (size_t j = 0; j < cols; ++j) col_payoff[j] += a[r][j];
    r = 0;
    c = 0;
    for (size_t i = 0; i < rows; ++i)
      if (row_payoff[i] > row_payoff[r]) r = i;
    for (size_t j = 0; j < cols; ++j)
      if (col_payoff[j] < col_payoff[c]) c = j;
    lower = std::max(lower, col_payoff[c] / (t + 1));  // row player guarantees
    upper = std::min(upper, row_payoff[r] / (t + 1));
  }
  return {lower, upper};
}

}  // namespace forel::oracle
