#pragma once

#include <stdexcept>
#include <string>

#include "forel/game.hpp"

namespace forel::testing {

inline GameTree biased_mp() { return build_matrix_game({{1, -1}, {-1, 10}}); }

// Derived from the 2x2 indifference equations: both players mix (11/13, 2/13).
inline Policy biased_mp_nash(const GameTree& g) {
  Policy pi = Policy::uniform(g);
  pi.probs[0][0] = {11.0 / 13.0, 2.0 / 13.0};
  pi.probs[1][0] = {11.0 / 13.0, 2.0 / 13.0};
  return pi;
}

// The one-parameter Kuhn equilibrium family, alpha in [0, 1/3]:
// player 1 bets J with alpha, Q never, K with 3*alpha; facing a bet after a
// check, calls with Q with alpha + 1/3 and with K always. Player 2 bets J
// with 1/3 and K always after a check, and calls a bet with Q with 1/3 and
// with K always.
inline Policy kuhn_alpha_nash(const GameTree& g, double alpha) {
  Policy pi = Policy::uniform(g);
  auto set = [&](Player p, const std::string& label, double bet) {
    int x = g.infostate_index(p, label);
    if (x < 0) throw std::runtime_error("missing infostate " + label);
    pi.probs[p][x] = {1.0 - bet, bet};
  };
  set(0, "J", alpha);
  set(0, "Q", 0.0);
  set(0, "K", 3.0 * alpha);
  set(0, "Jpb", 0.0);
  set(0, "Qpb", alpha + 1.0 / 3.0);
  set(0, "Kpb", 1.0);
  set(1, "Jp", 1.0 / 3.0);
  set(1, "Qp", 0.0);
  set(1, "Kp", 1.0);
  set(1, "Jb", 0.0);
  set(1, "Qb", 1.0 / 3.0);
  set(1, "Kb", 1.0);
  return pi;
}

}  // namespace forel::testing
