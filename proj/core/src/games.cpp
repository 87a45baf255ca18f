#include "equitrans/games.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace equitrans {

MatrixGameForm::MatrixGameForm(int rows, int cols,
                               std::vector<std::string> outcome_labels,
                               std::vector<int> table)
    : rows_(rows), cols_(cols), labels_(std::move(outcome_labels)), table_(std::move(table)) {
  if (rows_ < 1 || cols_ < 1)
    throw std::invalid_argument("strategy sets must be nonempty");
  if (labels_.empty()) throw std::invalid_argument("outcome set must be nonempty");
  if (table_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
    throw std::invalid_argument("outcome table size does not match rows*cols");
  for (int o : table_)
    if (o < 0 || o >= outcomes())
      throw std::invalid_argument("outcome table entry " + std::to_string(o) +
                                  " out of range");
}

int MatrixGameForm::outcome(int s1, int s2) const {
  if (s1 < 0 || s1 >= rows_ || s2 < 0 || s2 >= cols_)
    throw std::out_of_range("profile (" + std::to_string(s1) + "," +
                            std::to_string(s2) + ") out of range");
  return table_[static_cast<std::size_t>(s1) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(s2)];
}

std::pair<Poset, Poset> own_payoff_prefs(const PayoffTable& payoffs) {
  const int n = static_cast<int>(payoffs.size());
  BinaryRelation r1(n), r2(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (payoffs.pay[static_cast<std::size_t>(x)].first <
          payoffs.pay[static_cast<std::size_t>(y)].first)
        r1.add(x, y);
      if (payoffs.pay[static_cast<std::size_t>(x)].second <
          payoffs.pay[static_cast<std::size_t>(y)].second)
        r2.add(x, y);
    }
  return {Poset::validate(std::move(r1)), Poset::validate(std::move(r2))};
}

bool is_nash(const MatrixGameForm& form, const BinaryRelation& pref1,
             const BinaryRelation& pref2, Profile p) {
  const int here = form.outcome(p);
  for (int s1 = 0; s1 < form.rows(); ++s1)
    if (pref1.contains(here, form.outcome(s1, p.s2))) return false;
  for (int s2 = 0; s2 < form.cols(); ++s2)
    if (pref2.contains(here, form.outcome(p.s1, s2))) return false;
  return true;
}

bool is_nash(const MatrixGame& g, Profile p) {
  return is_nash(g.form, g.pref1.relation(), g.pref2.relation(), p);
}

std::vector<Profile> enumerate_nash(const MatrixGame& g) {
  std::vector<Profile> out;
  for (int s1 = 0; s1 < g.form.rows(); ++s1)
    for (int s2 = 0; s2 < g.form.cols(); ++s2)
      if (is_nash(g, {s1, s2})) out.push_back({s1, s2});
  return out;
}

MatrixGame derive_winlose(const MatrixGameForm& form, const WinLoseLabeling& wl) {
  if (wl.player1_wins.size() != static_cast<std::size_t>(form.outcomes()))
    throw std::invalid_argument("labeling size does not match outcome count");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(form.rows()) * static_cast<std::size_t>(form.cols()));
  for (int s1 = 0; s1 < form.rows(); ++s1)
    for (int s2 = 0; s2 < form.cols(); ++s2)
      table.push_back(wl.player1_wins.test(static_cast<std::size_t>(form.outcome(s1, s2)))
                          ? kPlayer1WinsOutcome
                          : kPlayer2WinsOutcome);
  MatrixGameForm wl_form(form.rows(), form.cols(), {"(1,0)", "(0,1)"}, std::move(table));
  BinaryRelation r1(2), r2(2);
  r1.add(kPlayer2WinsOutcome, kPlayer1WinsOutcome);  // (0,1) <1 (1,0)
  r2.add(kPlayer1WinsOutcome, kPlayer2WinsOutcome);  // (1,0) <2 (0,1)
  return {std::move(wl_form), Poset::validate(std::move(r1)), Poset::validate(std::move(r2))};
}

std::optional<std::pair<Player, int>> winning_strategy(const MatrixGameForm& form,
                                                       const WinLoseLabeling& wl) {
  if (wl.player1_wins.size() != static_cast<std::size_t>(form.outcomes()))
    throw std::invalid_argument("labeling size does not match outcome count");
  for (int s1 = 0; s1 < form.rows(); ++s1) {
    bool winning = true;
    for (int s2 = 0; winning && s2 < form.cols(); ++s2)
      winning = wl.player1_wins.test(static_cast<std::size_t>(form.outcome(s1, s2)));
    if (winning) return std::make_pair(Player::One, s1);
  }
  for (int s2 = 0; s2 < form.cols(); ++s2) {
    bool winning = true;
    for (int s1 = 0; winning && s1 < form.rows(); ++s1)
      winning = !wl.player1_wins.test(static_cast<std::size_t>(form.outcome(s1, s2)));
    if (winning) return std::make_pair(Player::Two, s2);
  }
  return std::nullopt;
}

Subset enforce_set(const MatrixGameForm& form, Player player, int strategy) {
  Subset out(static_cast<std::size_t>(form.outcomes()));
  if (player == Player::One) {
    if (strategy < 0 || strategy >= form.rows())
      throw std::out_of_range("row strategy out of range");
    for (int s2 = 0; s2 < form.cols(); ++s2)
      out.set(static_cast<std::size_t>(form.outcome(strategy, s2)));
  } else {
    if (strategy < 0 || strategy >= form.cols())
      throw std::out_of_range("column strategy out of range");
    for (int s1 = 0; s1 < form.rows(); ++s1)
      out.set(static_cast<std::size_t>(form.outcome(s1, strategy)));
  }
  return out;
}

std::optional<int> can_enforce(const MatrixGameForm& form, Player player,
                               const Subset& target) {
  if (target.size() != static_cast<std::size_t>(form.outcomes()))
    throw std::invalid_argument("target size does not match outcome count");
  const int count = player == Player::One ? form.rows() : form.cols();
  for (int s = 0; s < count; ++s)
    if (enforce_set(form, player, s).is_subset_of(target)) return s;
  return std::nullopt;
}

std::optional<WinLoseLabeling> find_undetermined_labeling(const MatrixGameForm& form) {
  const int k = form.outcomes();
  if (k > 62) throw std::length_error("too many outcomes to enumerate labelings");
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    WinLoseLabeling wl{subset_from_mask(static_cast<std::size_t>(k), mask)};
    if (!winning_strategy(form, wl)) return wl;
  }
  return std::nullopt;
}

bool is_determined_form(const MatrixGameForm& form) {
  return !find_undetermined_labeling(form).has_value();
}

std::optional<Subset> find_unenforceable_split(const MatrixGameForm& form) {
  const int k = form.outcomes();
  if (k > 62) throw std::length_error("too many outcomes to enumerate subsets");
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    Subset p = subset_from_mask(static_cast<std::size_t>(k), mask);
    if (!can_enforce(form, Player::One, p) && !can_enforce(form, Player::Two, ~p))
      return p;
  }
  return std::nullopt;
}

bool check_lemma6(const MatrixGameForm& form) {
  const bool determined = is_determined_form(form);
  const bool all_split = !find_unenforceable_split(form).has_value();
  return determined == all_split;
}

std::vector<Subset> enumerate_enforceable(const MatrixGameForm& form, Player player) {
  const int k = form.outcomes();
  if (k > 62) throw std::length_error("too many outcomes to enumerate subsets");
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    Subset p = subset_from_mask(static_cast<std::size_t>(k), mask);
    if (can_enforce(form, player, p)) out.push_back(std::move(p));
  }
  return out;
}

namespace {

// splitmix64: tiny, seedable, and identical on every platform, unlike the
// standard library distributions.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

struct TreeNode {
  int outcome = -1;           // >= 0 for leaves
  int owner_pos = -1;         // position within the owner's node list
  std::vector<int> children;  // indices into the node pool
};

}  // namespace

MatrixGameForm generate_tree_game(std::uint64_t seed, int max_depth,
                                  int max_branching, int max_outcomes) {
  if (max_depth < 1 || max_branching < 1 || max_outcomes < 1)
    throw std::invalid_argument("tree game bounds must be >= 1");

  SplitMix64 rng{seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull};
  std::vector<TreeNode> nodes;
  std::vector<int> node_depth;
  // Per-player internal node lists, in creation (preorder) order.
  std::vector<int> owned[2];

  // Root is always internal; deeper nodes may close early as leaves.
  struct Pending {
    int node;
    int depth;
  };
  nodes.push_back({});
  node_depth.push_back(0);
  std::vector<Pending> stack{{0, 0}};
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    const int who = depth % 2;  // Player 1 on even depths
    nodes[static_cast<std::size_t>(v)].owner_pos = static_cast<int>(owned[who].size());
    owned[who].push_back(v);
    const int fanout = 1 + rng.below(max_branching);
    for (int c = 0; c < fanout; ++c) {
      const int child = static_cast<int>(nodes.size());
      nodes.push_back({});
      node_depth.push_back(depth + 1);
      nodes[static_cast<std::size_t>(v)].children.push_back(child);
      const bool leaf = depth + 1 >= max_depth || rng.below(4) == 0;
      if (leaf)
        nodes[static_cast<std::size_t>(child)].outcome = rng.below(max_outcomes);
      else
        stack.push_back({child, depth + 1});
    }
  }

  // A player's strategy is one child choice per owned node: a mixed-radix
  // number whose digits follow the node list, most significant first.
  const auto strategy_count = [&](int who) -> std::uint64_t {
    std::uint64_t count = 1;
    for (int v : owned[who]) {
      count *= nodes[static_cast<std::size_t>(v)].children.size();
      if (count > (1ull << 22))
        throw std::length_error("tree game strategy space too large");
    }
    return count;
  };
  const std::uint64_t rows = strategy_count(0);
  const std::uint64_t cols = strategy_count(1);
  if (rows * cols > (1ull << 22))
    throw std::length_error("tree game outcome table too large");

  const auto choice_at = [&](int who, std::uint64_t strategy, int owner_pos) {
    std::uint64_t radix = strategy;
    for (int i = static_cast<int>(owned[who].size()) - 1; i > owner_pos; --i)
      radix /= nodes[static_cast<std::size_t>(owned[who][static_cast<std::size_t>(i)])].children.size();
    return static_cast<int>(
        radix % nodes[static_cast<std::size_t>(owned[who][static_cast<std::size_t>(owner_pos)])].children.size());
  };

  std::vector<int> table;
  table.reserve(rows * cols);
  for (std::uint64_t s1 = 0; s1 < rows; ++s1)
    for (std::uint64_t s2 = 0; s2 < cols; ++s2) {
      int v = 0;
      while (nodes[static_cast<std::size_t>(v)].outcome < 0) {
        const int who = node_depth[static_cast<std::size_t>(v)] % 2;
        const int pick = choice_at(who, who == 0 ? s1 : s2,
                                   nodes[static_cast<std::size_t>(v)].owner_pos);
        v = nodes[static_cast<std::size_t>(v)].children[static_cast<std::size_t>(pick)];
      }
      table.push_back(nodes[static_cast<std::size_t>(v)].outcome);
    }

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(max_outcomes));
  for (int i = 0; i < max_outcomes; ++i) labels.push_back("o" + std::to_string(i));
  return MatrixGameForm(static_cast<int>(rows), static_cast<int>(cols),
                        std::move(labels), std::move(table));
}

}  // namespace equitrans
