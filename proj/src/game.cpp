#include "forel/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace forel {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int GameTree::infostate_index(Player p, const std::string& label) const {
  const auto& labels = infostate_labels_[p];
  for (int x = 0; x < static_cast<int>(labels.size()); ++x) {
    if (labels[x] == label) return x;
  }
  return -1;
}

GameBuilder::GameBuilder(int num_players) : num_players_(num_players) {
  require(num_players >= 1, "game needs at least one player");
  game_.num_players_ = num_players;
}

int GameBuilder::add_node(int parent, Action a, std::vector<double> rewards) {
  require(rewards.size() == static_cast<size_t>(num_players_),
          "edge rewards must have one entry per player");
  GameNode node;
  node.parent = parent;
  node.parent_action = a;
  int id = static_cast<int>(game_.nodes_.size());
  if (parent >= 0) {
    GameNode& par = game_.nodes_[parent];
    require(a == par.num_actions(), "children must be attached in action order");
    par.children.push_back(id);
    for (double r : rewards) par.edge_rewards.push_back(r);
  }
  game_.nodes_.push_back(std::move(node));
  node_infostate_key_.emplace_back();
  node_declared_actions_.push_back(0);
  return id;
}

int GameBuilder::set_chance_root(std::vector<double> probs) {
  require(game_.nodes_.empty(), "root already set");
  int id = add_node(-1, -1, std::vector<double>(num_players_, 0.0));
  game_.nodes_[id].player = kChance;
  game_.nodes_[id].chance_probs = std::move(probs);
  return id;
}

int GameBuilder::set_decision_root(Player p, const std::string& key, int num_actions) {
  require(game_.nodes_.empty(), "root already set");
  int id = add_node(-1, -1, std::vector<double>(num_players_, 0.0));
  game_.nodes_[id].player = p;
  node_infostate_key_[id] = key;
  node_declared_actions_[id] = num_actions;
  return id;
}

int GameBuilder::add_decision(int parent, Action a, std::vector<double> rewards, Player p,
                              const std::string& key, int num_actions) {
  require(p >= 0 && p < num_players_, "bad player id");
  int id = add_node(parent, a, std::move(rewards));
  game_.nodes_[id].player = p;
  node_infostate_key_[id] = key;
  node_declared_actions_[id] = num_actions;
  return id;
}

int GameBuilder::add_chance(int parent, Action a, std::vector<double> rewards,
                            std::vector<double> probs) {
  int id = add_node(parent, a, std::move(rewards));
  game_.nodes_[id].player = kChance;
  game_.nodes_[id].chance_probs = std::move(probs);
  return id;
}

int GameBuilder::add_terminal(int parent, Action a, std::vector<double> rewards) {
  int id = add_node(parent, a, std::move(rewards));
  game_.nodes_[id].player = kTerminal;
  return id;
}

GameTree GameBuilder::build(bool check) {
  require(!game_.nodes_.empty(), "empty game");
  game_.infostate_histories_.assign(num_players_, {});
  game_.infostate_num_actions_.assign(num_players_, {});
  game_.infostate_labels_.assign(num_players_, {});
  std::vector<std::map<std::string, int>> ids(num_players_);

  game_.edge_offsets_.assign(game_.nodes_.size(), 0);
  int edges = 0;
  for (size_t h = 0; h < game_.nodes_.size(); ++h) {
    GameNode& node = game_.nodes_[h];
    game_.edge_offsets_[h] = edges;
    edges += node.num_actions();
    if (node.terminal()) {
      require(node.player == kTerminal || node_declared_actions_[h] == 0,
              "decision node " + std::to_string(h) + " has no children");
      node.player = kTerminal;
      continue;
    }
    if (node.player == kChance) {
      require(node.chance_probs.size() == node.children.size(),
              "chance node " + std::to_string(h) + " has mismatched distribution");
      continue;
    }
    require(node.num_actions() == node_declared_actions_[h],
            "node " + std::to_string(h) + " has " + std::to_string(node.num_actions()) +
                " children, declared " + std::to_string(node_declared_actions_[h]));
    auto& table = ids[node.player];
    auto [it, inserted] = table.try_emplace(node_infostate_key_[h],
                                            static_cast<int>(table.size()));
    node.infostate = it->second;
    if (inserted) {
      game_.infostate_histories_[node.player].emplace_back();
      game_.infostate_num_actions_[node.player].push_back(node.num_actions());
      game_.infostate_labels_[node.player].push_back(node_infostate_key_[h]);
    }
    game_.infostate_histories_[node.player][node.infostate].push_back(static_cast<int>(h));
  }
  game_.num_edges_ = edges;

  if (check) {
    auto violations = validate(game_);
    if (!violations.empty())
      throw std::invalid_argument("constructed game is invalid: " + violations.front());
  }
  return std::move(game_);
}

// --- Policy ----------------------------------------------------------------

Policy Policy::uniform(const GameTree& game) {
  Policy pi = zeros_like(game);
  for (auto& player : pi.probs) {
    for (auto& block : player) {
      std::fill(block.begin(), block.end(), 1.0 / block.size());
    }
  }
  return pi;
}

Policy Policy::zeros_like(const GameTree& game) {
  Policy pi;
  pi.probs.resize(game.num_players());
  for (Player p = 0; p < game.num_players(); ++p) {
    pi.probs[p].resize(game.num_infostates(p));
    for (int x = 0; x < game.num_infostates(p); ++x) {
      pi.probs[p][x].assign(game.num_actions(p, x), 0.0);
    }
  }
  return pi;
}

bool Policy::interior(double eps) const {
  for (const auto& player : probs)
    for (const auto& block : player)
      for (double v : block)
        if (!(v >= eps)) return false;
  return true;
}

Policy Policy::floored(double floor) const {
  Policy out = *this;
  for (auto& player : out.probs) {
    for (auto& block : player) {
      double sum = 0.0;
      for (double& v : block) {
        v = std::max(v, floor);
        sum += v;
      }
      for (double& v : block) v /= sum;
    }
  }
  return out;
}

void Policy::check_complete(const GameTree& game) const {
  if (probs.size() != static_cast<size_t>(game.num_players()))
    throw std::invalid_argument("incomplete policy: wrong player count");
  for (Player p = 0; p < game.num_players(); ++p) {
    if (probs[p].size() != static_cast<size_t>(game.num_infostates(p)))
      throw std::invalid_argument("incomplete policy: player " + std::to_string(p + 1) +
                                  " is missing infostate blocks");
    for (int x = 0; x < game.num_infostates(p); ++x) {
      if (probs[p][x].size() != static_cast<size_t>(game.num_actions(p, x)))
        throw std::invalid_argument("incomplete policy: block (" + std::to_string(p + 1) + "," +
                                    std::to_string(x) + ") has wrong arity");
    }
  }
}

double l1_distance(const Policy& a, const Policy& b) {
  double d = 0.0;
  for (size_t p = 0; p < a.probs.size(); ++p)
    for (size_t x = 0; x < a.probs[p].size(); ++x)
      for (size_t i = 0; i < a.probs[p][x].size(); ++i)
        d += std::abs(a.probs[p][x][i] - b.probs[p][x][i]);
  return d;
}

Policy splice(const Policy& base, const Policy& from, Player i) {
  Policy out = base;
  out.probs[i] = from.probs[i];
  return out;
}

// --- constructors ---------------------------------------------------------

GameTree build_matrix_game(const std::vector<std::vector<double>>& payoff) {
  require(!payoff.empty() && !payoff[0].empty(), "invalid game: empty payoff matrix");
  size_t cols = payoff[0].size();
  for (const auto& row : payoff) {
    require(row.size() == cols, "invalid game: ragged payoff matrix");
    for (double v : row) require(std::isfinite(v), "invalid game: non-finite payoff");
  }
  GameBuilder b(2);
  int root = b.set_decision_root(0, "p1", static_cast<int>(payoff.size()));
  for (Action a1 = 0; a1 < static_cast<int>(payoff.size()); ++a1) {
    int h = b.add_decision(root, a1, {0.0, 0.0}, 1, "p2", static_cast<int>(cols));
    for (Action a2 = 0; a2 < static_cast<int>(cols); ++a2) {
      double v = payoff[a1][a2];
      b.add_terminal(h, a2, {v, -v});
    }
  }
  return b.build();
}

GameTree build_polymatrix_game(
    const std::vector<std::vector<std::vector<std::vector<double>>>>& pairwise) {
  int n = static_cast<int>(pairwise.size());
  require(n >= 2, "invalid game: polymatrix needs at least two players");
  std::vector<int> arity(n, -1);
  for (int i = 0; i < n; ++i) {
    require(pairwise[i].size() == static_cast<size_t>(n), "invalid game: ragged pairwise family");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = pairwise[i][j];
      require(!a.empty() && !a[0].empty(), "invalid game: empty pairwise block");
      int rows = static_cast<int>(a.size());
      if (arity[i] == -1) arity[i] = rows;
      require(arity[i] == rows, "invalid game: inconsistent action count for player " +
                                    std::to_string(i + 1));
      for (const auto& row : a)
        require(row.size() == a[0].size(), "invalid game: ragged pairwise block");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& aij = pairwise[i][j];
      const auto& aji = pairwise[j][i];
      require(aij[0].size() == static_cast<size_t>(arity[j]),
              "invalid game: pairwise block dimensions disagree");
      for (size_t r = 0; r < aij.size(); ++r)
        for (size_t c = 0; c < aij[r].size(); ++c)
          require(std::abs(aij[r][c] + aji[c][r]) <= 1e-12,
                  "invalid game: antisymmetry violated at A^{" + std::to_string(i + 1) +
                      std::to_string(j + 1) + "}[" + std::to_string(r) + "][" +
                      std::to_string(c) + "]");
    }
  }

  GameBuilder b(n);
  // One ply per player; everyone but the first is blind to earlier moves.
  int root = b.set_decision_root(0, "p1", arity[0]);
  std::vector<Action> profile(n, 0);
  std::function<void(int, int, std::vector<Action>&)> expand =
      [&](int node, int depth, std::vector<Action>& acts) {
        for (Action a = 0; a < arity[depth]; ++a) {
          acts[depth] = a;
          if (depth + 1 < n) {
            int child = b.add_decision(node, a, std::vector<double>(n, 0.0), depth + 1,
                                       "p" + std::to_string(depth + 2), arity[depth + 1]);
            expand(child, depth + 1, acts);
          } else {
            std::vector<double> payoff(n, 0.0);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j)
                if (j != i) payoff[i] += pairwise[i][j][acts[i]][acts[j]];
            b.add_terminal(node, a, std::move(payoff));
          }
        }
      };
  expand(root, 0, profile);
  return b.build();
}

GameTree build_kuhn_poker() {
  const char kCard[3] = {'J', 'Q', 'K'};
  GameBuilder b(2);
  std::vector<double> deal_probs(6, 1.0 / 6.0);
  int root = b.set_chance_root(deal_probs);
  int deal = 0;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      double win1 = c1 > c2 ? 1.0 : -1.0;
      std::string s1(1, kCard[c1]);
      std::string s2(1, kCard[c2]);
      // Player 1 decides: 0 = pass, 1 = bet.
      int n1 = b.add_decision(root, deal++, {0, 0}, 0, s1, 2);
      int n2p = b.add_decision(n1, 0, {0, 0}, 1, s2 + "p", 2);
      int n2b = b.add_decision(n1, 1, {0, 0}, 1, s2 + "b", 2);
      // pass-pass: showdown for the antes.
      b.add_terminal(n2p, 0, {win1, -win1});
      // pass-bet: player 1 folds or calls.
      int n1pb = b.add_decision(n2p, 1, {0, 0}, 0, s1 + "pb", 2);
      b.add_terminal(n1pb, 0, {-1, 1});
      b.add_terminal(n1pb, 1, {2 * win1, -2 * win1});
      // bet: player 2 folds or calls.
      b.add_terminal(n2b, 0, {1, -1});
      b.add_terminal(n2b, 1, {2 * win1, -2 * win1});
    }
  }
  return b.build();
}

namespace {

// Leduc hold'em: 6-card deck (two suits of J/Q/K), one private card each, one
// public card dealt between two betting rounds, fixed raise sizes 2 and 4, at
// most two raises per round. Fold is legal only when facing a bet, so action
// arity varies by node: {check/call, raise}, {fold, call, raise}, {fold, call}.
struct LeducBuilder {
  GameBuilder b{2};

  std::string card_name(int c) const {
    return std::string(1, "JQK"[c / 2]) + char('a' + c % 2);
  }

  // Creates the mover's decision node as child (parent, a) and expands it.
  // `hist` is the full public action string so far (both rounds, incl. the
  // public card once dealt); it is part of the information-state key.
  void betting(int parent, Action a, int rnd, int c1, int c2, int pub, Player mover, int raises,
               double bet1, double bet2, double to_call, int actions_this_round,
               const std::string& hist) {
    int c_priv = mover == 0 ? c1 : c2;
    std::string key = card_name(c_priv) + ":" + hist;
    bool can_raise = raises < 2;
    int arity = (to_call > 0 ? 1 : 0) + 1 + (can_raise ? 1 : 0);
    int self = b.add_decision(parent, a, {0, 0}, mover, key, arity);
    double raise_size = rnd == 0 ? 2.0 : 4.0;
    Action next = 0;
    if (to_call > 0) {
      // fold: opponent collects the folder's committed chips
      double v = mover == 0 ? -bet1 : bet2;
      b.add_terminal(self, next++, {v, -v});
    }
    {
      double nb1 = bet1 + (mover == 0 ? to_call : 0.0);
      double nb2 = bet2 + (mover == 1 ? to_call : 0.0);
      if (actions_this_round > 0) {  // a call/check after any action closes the round
        end_round(self, next++, rnd, c1, c2, pub, nb1, nb2, hist + "c");
      } else {
        betting(self, next++, rnd, c1, c2, pub, 1 - mover, raises, nb1, nb2, 0.0, 1,
                hist + "c");
      }
    }
    if (can_raise) {
      double nb1 = bet1 + (mover == 0 ? to_call + raise_size : 0.0);
      double nb2 = bet2 + (mover == 1 ? to_call + raise_size : 0.0);
      betting(self, next++, rnd, c1, c2, pub, 1 - mover, raises + 1, nb1, nb2, raise_size,
              actions_this_round + 1, hist + "r");
    }
  }

  void end_round(int parent, Action a, int rnd, int c1, int c2, int pub, double bet1, double bet2,
                 const std::string& hist) {
    if (rnd == 0) {
      std::vector<int> remaining;
      for (int c = 0; c < 6; ++c)
        if (c != c1 && c != c2) remaining.push_back(c);
      int ch = b.add_chance(parent, a, {0, 0},
                            std::vector<double>(remaining.size(), 1.0 / remaining.size()));
      for (size_t k = 0; k < remaining.size(); ++k) {
        betting(ch, static_cast<Action>(k), 1, c1, c2, remaining[k], 0, 0, bet1, bet2, 0.0, 0,
                hist + "/" + card_name(remaining[k]) + "/");
      }
    } else {
      double win1 = showdown(c1, c2, pub);
      double v = win1 > 0 ? bet2 : (win1 < 0 ? -bet1 : 0.0);
      b.add_terminal(parent, a, {v, -v});
    }
  }

  double showdown(int c1, int c2, int pub) const {
    int r1 = c1 / 2, r2 = c2 / 2, rp = pub / 2;
    if (r1 == rp && r2 != rp) return 1;
    if (r2 == rp && r1 != rp) return -1;
    if (r1 > r2) return 1;
    if (r2 > r1) return -1;
    return 0;
  }

  GameTree run() {
    std::vector<std::pair<int, int>> deals;
    for (int c1 = 0; c1 < 6; ++c1)
      for (int c2 = 0; c2 < 6; ++c2)
        if (c1 != c2) deals.emplace_back(c1, c2);
    int root = b.set_chance_root(std::vector<double>(deals.size(), 1.0 / deals.size()));
    Action a = 0;
    for (auto [c1, c2] : deals) {
      // ante is one chip each
      betting(root, a++, 0, c1, c2, -1, 0, 0, 1.0, 1.0, 0.0, 0, "");
    }
    return b.build();
  }
};

}  // namespace

GameTree build_leduc_poker() {
  LeducBuilder lb;
  return lb.run();
}

// --- validation ------------------------------------------------------------

std::vector<std::string> validate(const GameTree& game) {
  std::vector<std::string> out;
  int n = game.num_nodes();
  // reachability and acyclicity come from the construction (parent < child);
  // re-check the ordering in case a tree was assembled by hand.
  for (int h = 0; h < n; ++h) {
    const GameNode& node = game.node(h);
    for (int c : node.children) {
      if (c <= h || c >= n) out.push_back("node " + std::to_string(h) + ": child out of order");
    }
    if (node.player == kChance) {
      double sum = 0.0;
      bool positive = true;
      for (double p : node.chance_probs) {
        sum += p;
        positive = positive && p > 0.0;
      }
      if (!positive) out.push_back("chance node " + std::to_string(h) + ": zero-probability move");
      if (std::abs(sum - 1.0) > 1e-12)
        out.push_back("chance node " + std::to_string(h) + ": distribution sums to " +
                      std::to_string(sum));
    }
  }
  // infostates: same player, same action arity everywhere.
  for (Player p = 0; p < game.num_players(); ++p) {
    for (int x = 0; x < game.num_infostates(p); ++x) {
      for (int h : game.infostate_histories(p, x)) {
        const GameNode& node = game.node(h);
        if (node.player != p)
          out.push_back("infostate (" + std::to_string(p + 1) + "," + std::to_string(x) +
                        "): history " + std::to_string(h) + " acted by another player");
        if (node.num_actions() != game.num_actions(p, x))
          out.push_back("infostate (" + std::to_string(p + 1) + "," + std::to_string(x) +
                        "): history " + std::to_string(h) + " has a different action set");
      }
    }
  }
  // perfect recall: identical own (infostate, action) sequence within an infostate.
  for (Player p = 0; p < game.num_players(); ++p) {
    for (int x = 0; x < game.num_infostates(p); ++x) {
      std::vector<std::pair<int, Action>> ref;
      bool have_ref = false;
      for (int h : game.infostate_histories(p, x)) {
        std::vector<std::pair<int, Action>> seq;
        for (int cur = h; game.node(cur).parent >= 0;) {
          int parent = game.node(cur).parent;
          if (game.node(parent).player == p)
            seq.emplace_back(game.node(parent).infostate, game.node(cur).parent_action);
          cur = parent;
        }
        std::reverse(seq.begin(), seq.end());
        if (!have_ref) {
          ref = seq;
          have_ref = true;
        } else if (seq != ref) {
          out.push_back("perfect recall violated at infostate (" + std::to_string(p + 1) + "," +
                        std::to_string(x) + "): history " + std::to_string(h) +
                        " remembers a different own sequence");
        }
      }
    }
  }
  return out;
}

// --- text formats ----------------------------------------------------------

namespace {

std::vector<double> read_numbers(std::istream& in, size_t count, const std::string& what) {
  std::vector<double> vals;
  vals.reserve(count);
  double v;
  while (vals.size() < count && in >> v) vals.push_back(v);
  if (vals.size() != count)
    throw std::invalid_argument("game file: expected " + std::to_string(count) + " numbers for " +
                                what);
  return vals;
}

}  // namespace

GameTree parse_game_text(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "matrix") {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
      throw std::invalid_argument("game file: bad matrix header");
    std::vector<std::vector<double>> a(rows);
    std::string line;
    std::getline(in, line);  // rest of header line
    int r = 0;
    while (r < rows && std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream row(line);
      double v;
      while (row >> v) a[r].push_back(v);
      if (a[r].size() != static_cast<size_t>(cols))
        throw std::invalid_argument("game file: ragged row " + std::to_string(r + 1));
      ++r;
    }
    if (r != rows) throw std::invalid_argument("game file: missing rows");
    return build_matrix_game(a);
  }
  if (kind == "polymatrix") {
    int n = 0;
    if (!(in >> n) || n < 2) throw std::invalid_argument("game file: bad polymatrix header");
    std::vector<int> arity(n);
    for (int i = 0; i < n; ++i)
      if (!(in >> arity[i]) || arity[i] < 1)
        throw std::invalid_argument("game file: bad action counts");
    std::vector<std::vector<std::vector<std::vector<double>>>> blocks(
        n, std::vector<std::vector<std::vector<double>>>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto vals = read_numbers(in, static_cast<size_t>(arity[i]) * arity[j],
                                 "block A^{" + std::to_string(i + 1) + std::to_string(j + 1) + "}");
        std::vector<std::vector<double>> aij(arity[i], std::vector<double>(arity[j]));
        std::vector<std::vector<double>> aji(arity[j], std::vector<double>(arity[i]));
        for (int r = 0; r < arity[i]; ++r)
          for (int c = 0; c < arity[j]; ++c) {
            aij[r][c] = vals[static_cast<size_t>(r) * arity[j] + c];
            aji[c][r] = -aij[r][c];
          }
        blocks[i][j] = std::move(aij);
        blocks[j][i] = std::move(aji);
      }
    }
    double extra;
    if (in >> extra) throw std::invalid_argument("game file: trailing numbers");
    return build_polymatrix_game(blocks);
  }
  throw std::invalid_argument("game file: unknown kind '" + kind + "'");
}

GameTree load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game_text(buf.str());
}

std::string policy_to_text(const Policy& policy) {
  std::string out;
  char buf[64];
  for (size_t p = 0; p < policy.probs.size(); ++p) {
    for (size_t x = 0; x < policy.probs[p].size(); ++x) {
      out += std::to_string(p) + " " + std::to_string(x);
      for (double v : policy.probs[p][x]) {
        std::snprintf(buf, sizeof(buf), " %.17g", v);
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

Policy policy_from_text(const GameTree& game, const std::string& text) {
  Policy pi = Policy::zeros_like(game);
  std::vector<std::vector<bool>> seen(game.num_players());
  for (Player p = 0; p < game.num_players(); ++p) seen[p].assign(game.num_infostates(p), false);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int p, x;
    if (!(row >> p >> x)) throw std::invalid_argument("policy file: bad line: " + line);
    if (p < 0 || p >= game.num_players() || x < 0 || x >= game.num_infostates(p))
      throw std::invalid_argument("policy file: unknown infostate " + std::to_string(p) + " " +
                                  std::to_string(x));
    for (double& v : pi.probs[p][x]) {
      if (!(row >> v)) throw std::invalid_argument("policy file: short row: " + line);
    }
    double extra;
    if (row >> extra) throw std::invalid_argument("policy file: long row: " + line);
    seen[p][x] = true;
  }
  for (Player p = 0; p < game.num_players(); ++p)
    for (int x = 0; x < game.num_infostates(p); ++x)
      if (!seen[p][x])
        throw std::invalid_argument("policy file: missing infostate " + std::to_string(p) + " " +
                                    std::to_string(x));
  return pi;
}

void save_policy(const Policy& policy, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write policy file: " + path);
  out << policy_to_text(policy);
}

Policy load_policy(const GameTree& game, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open policy file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return policy_from_text(game, buf.str());
}

}  // namespace forel
