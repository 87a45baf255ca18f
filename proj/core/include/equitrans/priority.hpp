// Priority games on finite arenas: plays are infinite, the outcome is the
// least priority occurring infinitely often, and each priority carries a
// payoff pair. A min-priority parity solver with positional strategy
// extraction serves as the determinacy oracle, which makes the equilibrium
// transfer produce positional secure equilibria.

#pragma once

#include "equitrans/secure.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace equitrans {

/// A finite game arena. Every vertex has at least one successor (plays never
/// stall), so dead ends are a construction error.
class Arena {
 public:
  struct Vertex {
    Player owner = Player::One;
    int priority = 0;
    std::vector<int> successors;
  };

  Arena(std::vector<Vertex> vertices, int initial);

  int size() const { return static_cast<int>(vertices_.size()); }
  int initial() const { return initial_; }
  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Sorted, deduplicated priorities occurring in the arena.
  const std::vector<int>& occurring_priorities() const { return priorities_; }

 private:
  std::vector<Vertex> vertices_;
  int initial_;
  std::vector<int> priorities_;
};

/// A choice of one successor per owned vertex; -1 everywhere else.
struct PositionalStrategy {
  std::vector<int> choice;

  bool valid_for(const Arena& arena, Player owner) const;
};

/// An arena plus payoff pairs, defined on exactly the occurring priorities.
class PriorityGame {
 public:
  PriorityGame(Arena arena, std::map<int, std::pair<Rational, Rational>> payoffs);

  const Arena& arena() const { return arena_; }
  const std::map<int, std::pair<Rational, Rational>>& payoffs() const { return payoffs_; }

 private:
  Arena arena_;
  std::map<int, std::pair<Rational, Rational>> payoffs_;
};

/// Payoff pairs in occurring-priority order, aligned with the oracle's
/// outcome indexing.
PayoffTable payoff_table(const PriorityGame& game);

/// An arena whose priorities are remapped so that Player 1 wins a play iff
/// the least priority occurring infinitely often is even.
struct ParityInstance {
  Arena arena;
};

/// Win/lose derivation for priority games: remaps priorities monotonically so
/// that parity of the new priority encodes membership of the old one in the
/// winning set `player1_wins`.
ParityInstance reparity_encode(const Arena& arena, const std::set<int>& player1_wins);

struct ParityRegions {
  Subset player1_region;  // complement is Player 2's region
  PositionalStrategy strategy1;  // winning on player1_region
  PositionalStrategy strategy2;  // winning on the complement
};

/// Zielonka's recursive attractor decomposition, adapted to the min-priority
/// convention, with positional strategies for both players on their regions.
ParityRegions solve_parity(const ParityInstance& instance);

/// The exact set of priorities p such that some play from `start`, consistent
/// with `player`'s fixed strategy, has least-infinitely-occurring priority p.
std::set<int> enforce_priorities(const Arena& arena, Player player,
                                 const PositionalStrategy& sigma, int start);
std::set<int> enforce_priorities(const Arena& arena, Player player,
                                 const PositionalStrategy& sigma);

/// What the deviator can realize against a fixed positional opponent: the
/// residual game has one free player, so this is the enforce analysis with
/// the roles swapped. Covers all deviations, positional or not.
std::set<int> best_deviation(const Arena& arena, const PositionalStrategy& opponent_sigma,
                             Player deviator);

/// The least priority on the cycle of the unique play induced by two total
/// positional strategies from the initial vertex.
int realized_priority(const Arena& arena, const PositionalStrategy& s1,
                      const PositionalStrategy& s2);

/// Determinacy oracle backed by the parity solver; total, since parity games
/// are determined via positional strategies. Outcome i is the i-th occurring
/// priority in ascending order.
class PriorityOracle {
 public:
  using Strategy1 = PositionalStrategy;
  using Strategy2 = PositionalStrategy;

  explicit PriorityOracle(Arena arena);

  const Arena& arena() const { return arena_; }
  const std::vector<int>& outcome_priorities() const { return arena_.occurring_priorities(); }
  int num_outcomes() const { return static_cast<int>(outcome_priorities().size()); }

  Player decide(const WinLoseLabeling& wl);
  PositionalStrategy player1_strategy(const WinLoseLabeling& wl);
  PositionalStrategy player2_strategy(const WinLoseLabeling& wl);

  /// Realized outcome index of a strategy pair.
  int outcome(const PositionalStrategy& s1, const PositionalStrategy& s2) const;

  long decisions() const { return decisions_; }
  long extractions() const { return extractions_; }

 private:
  ParityRegions solve_labeling(const WinLoseLabeling& wl) const;
  std::set<int> winning_priorities(const WinLoseLabeling& wl) const;
  PositionalStrategy extract(const WinLoseLabeling& wl, Player who);

  Arena arena_;
  long decisions_ = 0;
  long extractions_ = 0;
};

static_assert(DeterminacyOracle<PriorityOracle>);

/// Positional secure equilibrium of a priority game: malevolent preferences
/// over the occurring priorities, equilibrium transfer with the parity
/// backend. The realized play's least-infinitely-occurring priority is the
/// result's outcome.
TransferResult<PositionalStrategy, PositionalStrategy> secure_equilibrium_priority(
    const PriorityGame& game, TransferMode mode);

/// Independent verification of a positional pair against all deviations (of
/// any memory), via the one-player residual analysis.
bool verify_priority_secure(const PriorityGame& game, const PositionalStrategy& s1,
                            const PositionalStrategy& s2);

}  // namespace equitrans
