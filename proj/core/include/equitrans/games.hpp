// Finite two-player normal-form games: game forms, preferences, Nash
// equilibria, derived win/lose games, enforceable outcome sets, and game-form
// determinacy, all with exhaustive brute-force checkers.

#pragma once

#include "equitrans/poset.hpp"
#include "equitrans/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace equitrans {

enum class Player { One, Two };

constexpr Player opponent(Player p) {
  return p == Player::One ? Player::Two : Player::One;
}

struct Profile {
  int s1 = 0;
  int s2 = 0;
  bool operator==(const Profile&) const = default;
};

/// Strategy sets plus an outcome table; no preferences attached. Outcomes are
/// indices into a label list so that nothing downstream ever needs them to be
/// numeric.
class MatrixGameForm {
 public:
  /// `table` is row-major, one outcome index per profile.
  MatrixGameForm(int rows, int cols, std::vector<std::string> outcome_labels,
                 std::vector<int> table);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int outcomes() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& outcome_labels() const { return labels_; }

  int outcome(int s1, int s2) const;
  int outcome(Profile p) const { return outcome(p.s1, p.s2); }

  bool operator==(const MatrixGameForm&) const = default;

 private:
  int rows_, cols_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
};

/// A game form endowed with one strict-partial-order preference per player.
struct MatrixGame {
  MatrixGameForm form;
  Poset pref1;
  Poset pref2;
};

/// Maps each outcome to a winner; stored as the set of outcomes where
/// Player 1 wins (every other outcome is a Player 2 win).
struct WinLoseLabeling {
  Subset player1_wins;
};

/// Optional numeric decoration of the outcomes: one exact payoff pair each.
struct PayoffTable {
  std::vector<std::pair<Rational, Rational>> pay;

  std::size_t size() const { return pay.size(); }
};

/// The usual preferences induced by payoffs: each player prefers a strictly
/// greater own component.
std::pair<Poset, Poset> own_payoff_prefs(const PayoffTable& payoffs);

bool is_nash(const MatrixGame& g, Profile p);

/// Nash check against raw (not necessarily transitive) preference relations.
bool is_nash(const MatrixGameForm& form, const BinaryRelation& pref1,
             const BinaryRelation& pref2, Profile p);

/// All equilibria in row-major profile order; the brute-force oracle.
std::vector<Profile> enumerate_nash(const MatrixGame& g);

/// The two-outcome game obtained by rewriting each outcome with its winner.
/// Outcome 0 is "(1,0)" (Player 1 wins), outcome 1 is "(0,1)".
MatrixGame derive_winlose(const MatrixGameForm& form, const WinLoseLabeling& wl);

inline constexpr int kPlayer1WinsOutcome = 0;
inline constexpr int kPlayer2WinsOutcome = 1;

/// The winner and their strategy when the labeled game is determined;
/// Player 1 rows are scanned before Player 2 columns, smallest index first.
std::optional<std::pair<Player, int>> winning_strategy(const MatrixGameForm& form,
                                                       const WinLoseLabeling& wl);

/// The exact set of outcomes reachable when `player` fixes `strategy`.
Subset enforce_set(const MatrixGameForm& form, Player player, int strategy);

/// Smallest strategy index whose enforce set is contained in `target`.
std::optional<int> can_enforce(const MatrixGameForm& form, Player player,
                               const Subset& target);

/// True iff every one of the 2^|O| derived win/lose games is determined.
/// Exponential in the number of outcomes; callers must respect the cost.
bool is_determined_form(const MatrixGameForm& form);

/// First labeling (in increasing bit-vector order) with no winning strategy.
std::optional<WinLoseLabeling> find_undetermined_labeling(const MatrixGameForm& form);

/// Checks that determinacy coincides with "every outcome subset is enforceable
/// by Player 1 or its complement by Player 2"; returns whether the two sides
/// agree (they always should — this is a test harness for that equivalence).
bool check_lemma6(const MatrixGameForm& form);

/// First subset (in increasing bit-vector order) that Player 1 cannot enforce
/// and whose complement Player 2 cannot enforce either; empty for determined
/// forms.
std::optional<Subset> find_unenforceable_split(const MatrixGameForm& form);

/// Every subset the player can enforce; an upward-closed family.
std::vector<Subset> enumerate_enforceable(const MatrixGameForm& form, Player player);

/// The normal form induced by a random finite perfect-information game tree
/// with alternating ownership (Player 1 at the root). Such forms are
/// determined by backward induction, which makes this an unbounded supply of
/// determined fixtures. Deterministic in `seed` across platforms.
MatrixGameForm generate_tree_game(std::uint64_t seed, int max_depth,
                                  int max_branching, int max_outcomes);

}  // namespace equitrans
