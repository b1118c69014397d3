#pragma once

#include <span>
#include <string>
#include <vector>

namespace forel {

using Action = int;
using Player = int;

inline constexpr Player kChance = -1;
inline constexpr Player kTerminal = -2;

// Probability floor below which a policy entry is considered non-interior.
inline constexpr double kInteriorEps = 1e-9;

// One history (node) of the game tree. Rewards live on the (node, action)
// edges; terminal payoffs are folded into the reward of the final edge.
struct GameNode {
  Player player = kTerminal;          // kChance, kTerminal, or 0..N-1
  int infostate = -1;                 // dense per-player id (decision nodes)
  int parent = -1;
  Action parent_action = -1;
  std::vector<int> children;          // one entry per legal action
  std::vector<double> chance_probs;   // chance nodes only
  std::vector<double> edge_rewards;   // [action * num_players + player]

  bool terminal() const { return children.empty(); }
  int num_actions() const { return static_cast<int>(children.size()); }
};

// Finite extensive-form game with perfect recall. Immutable after build();
// nodes are stored so that a parent index is always less than its children,
// which makes index order a topological order.
class GameTree {
 public:
  int num_players() const { return num_players_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  const GameNode& node(int h) const { return nodes_[h]; }

  int num_infostates(Player p) const { return static_cast<int>(infostate_histories_[p].size()); }
  int num_actions(Player p, int x) const { return infostate_num_actions_[p][x]; }
  const std::vector<int>& infostate_histories(Player p, int x) const {
    return infostate_histories_[p][x];
  }
  const std::string& infostate_label(Player p, int x) const { return infostate_labels_[p][x]; }
  // Index of a labelled infostate, or -1.
  int infostate_index(Player p, const std::string& label) const;

  // Flat edge indexing: edge_offset(h) + a enumerates all (h, a) pairs.
  int edge_offset(int h) const { return edge_offsets_[h]; }
  int num_edges() const { return num_edges_; }

  double reward(int h, Action a, Player i) const {
    return nodes_[h].edge_rewards[static_cast<size_t>(a) * num_players_ + i];
  }

 private:
  friend class GameBuilder;
  int num_players_ = 0;
  std::vector<GameNode> nodes_;
  std::vector<std::vector<std::vector<int>>> infostate_histories_;  // [player][x] -> nodes
  std::vector<std::vector<int>> infostate_num_actions_;
  std::vector<std::vector<std::string>> infostate_labels_;
  std::vector<int> edge_offsets_;
  int num_edges_ = 0;
};

// Incremental tree construction. Infostates are named by string keys while
// building; build() assigns dense integer ids per player in depth-first
// order of first appearance.
class GameBuilder {
 public:
  explicit GameBuilder(int num_players);

  int set_chance_root(std::vector<double> probs);
  int set_decision_root(Player p, const std::string& infostate_key, int num_actions);

  // Children are attached in action order; rewards is one value per player.
  int add_decision(int parent, Action a, std::vector<double> rewards, Player p,
                   const std::string& infostate_key, int num_actions);
  int add_chance(int parent, Action a, std::vector<double> rewards, std::vector<double> probs);
  int add_terminal(int parent, Action a, std::vector<double> rewards);

  // Throws on an invalid tree unless check is false (used to hand-build
  // pathological inputs for validate()).
  GameTree build(bool check = true);

 private:
  int add_node(int parent, Action a, std::vector<double> rewards);
  int num_players_;
  GameTree game_;
  std::vector<std::string> node_infostate_key_;
  std::vector<int> node_declared_actions_;
};

// Per-infostate probability blocks, one block per (player, infostate).
struct Policy {
  std::vector<std::vector<std::vector<double>>> probs;  // [player][infostate][action]

  static Policy uniform(const GameTree& game);
  static Policy zeros_like(const GameTree& game);

  std::span<const double> block(Player p, int x) const { return probs[p][x]; }
  std::span<double> block(Player p, int x) { return probs[p][x]; }

  bool interior(double eps = kInteriorEps) const;
  // Clamps entries below `floor` and renormalizes each block.
  Policy floored(double floor) const;
  // Checks the policy has a block of the right arity for every infostate.
  void check_complete(const GameTree& game) const;
};

double l1_distance(const Policy& a, const Policy& b);

// Replaces player i's blocks in `base` with those from `from`.
Policy splice(const Policy& base, const Policy& from, Player i);

// --- constructors for the test games ------------------------------------

// Two-ply zero-sum embedding of a matrix game: player 1 moves first, player 2
// moves blind (a single shared infostate). Payoffs (A[a1,a2], -A[a1,a2]).
GameTree build_matrix_game(const std::vector<std::vector<double>>& payoff);

// Zero-sum N-player polymatrix game. `pairwise[i][j]` is A^{ij} (empty on the
// diagonal); antisymmetry A^{ij} = -(A^{ji})^T is required within 1e-12.
GameTree build_polymatrix_game(
    const std::vector<std::vector<std::vector<std::vector<double>>>>& pairwise);

GameTree build_kuhn_poker();
GameTree build_leduc_poker();

// Non-throwing invariant audit: empty result iff the tree satisfies all
// structural invariants including perfect recall.
std::vector<std::string> validate(const GameTree& game);

// --- plain-text formats ---------------------------------------------------

// "matrix R C" / "polymatrix N" headers; see README for the layout.
GameTree load_game_file(const std::string& path);
GameTree parse_game_text(const std::string& text);

// One line per (player, infostate, probs...), 17 significant digits.
void save_policy(const Policy& policy, const std::string& path);
Policy load_policy(const GameTree& game, const std::string& path);
std::string policy_to_text(const Policy& policy);
Policy policy_from_text(const GameTree& game, const std::string& text);

}  // namespace forel
