// Equilibrium transfer: turns a determinacy oracle for the derived win/lose
// games into a Nash equilibrium of the multi-outcome game. The oracle is a
// concept so that backends with structured strategies (matrix indices,
// positional strategies on arenas) share one implementation.

#pragma once

#include "equitrans/games.hpp"
#include "equitrans/poset.hpp"

#include <concepts>
#include <stdexcept>
#include <utility>

namespace equitrans {

enum class TransferMode { kNaive, kGreedy };

/// The transfer detected an inconsistent oracle answer (or was fed a game
/// form that is not determined).
class OracleUnsoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A derived win/lose game turned out to have no winning strategy. The
/// offending labeling is attached. Undetermined inputs are one way an oracle
/// fails to honor its contract, hence the inheritance.
class NotDeterminedError : public OracleUnsoundError {
 public:
  explicit NotDeterminedError(Subset labeling)
      : OracleUnsoundError("derived win/lose game is not determined"),
        labeling_(std::move(labeling)) {}
  const Subset& labeling() const { return labeling_; }

 private:
  Subset labeling_;
};

// A determinacy oracle decides the winner of every derived win/lose game and
// produces winning strategies drawn from the backend's distinguished strategy
// sets. It also evaluates a strategy pair to the realized outcome, and counts
// its decide/strategy calls — the call counts are part of the observable
// contract of the transfer.
template <typename O>
concept DeterminacyOracle = requires(O& oracle, const O& coracle,
                                     const WinLoseLabeling& wl,
                                     const typename O::Strategy1& s1,
                                     const typename O::Strategy2& s2) {
  typename O::Strategy1;
  typename O::Strategy2;
  { coracle.num_outcomes() } -> std::convertible_to<int>;
  { oracle.decide(wl) } -> std::same_as<Player>;
  { oracle.player1_strategy(wl) } -> std::same_as<typename O::Strategy1>;
  { oracle.player2_strategy(wl) } -> std::same_as<typename O::Strategy2>;
  { coracle.outcome(s1, s2) } -> std::convertible_to<int>;
  { coracle.decisions() } -> std::convertible_to<long>;
  { coracle.extractions() } -> std::convertible_to<long>;
};

template <typename S1, typename S2>
struct TransferResult {
  S1 strategy1;
  S2 strategy2;
  int outcome = -1;        // the equilibrium outcome
  Subset guarantee_set;    // lift-maximal set Player 1 locks in
  Subset improvement_set;  // what Player 1 would need to enforce to do better
  long decisions = 0;
  long extractions = 0;
};

/// Reference search for the lift-maximal enforceable set: enumerates all
/// 2^|O| outcome subsets, keeps those Player 1 wins, and returns a
/// lift-maximal one (smallest bit-vector value among the maximal candidates).
template <DeterminacyOracle O>
Subset maximal_enforceable_naive(const Poset& pref1, O& oracle) {
  const int k = oracle.num_outcomes();
  if (k > 62) throw std::length_error("too many outcomes to enumerate subsets");
  std::vector<Subset> enforceable;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    Subset p = subset_from_mask(static_cast<std::size_t>(k), mask);
    if (oracle.decide({p}) == Player::One) enforceable.push_back(std::move(p));
  }
  for (const Subset& candidate : enforceable) {
    bool maximal = true;
    for (const Subset& other : enforceable)
      if (lift_less(pref1, candidate, other)) {
        maximal = false;
        break;
      }
    if (maximal) return candidate;
  }
  throw OracleUnsoundError("player 1 cannot enforce any outcome set, not even the full one");
}

/// Linear-call search: walk Player 1's preference from worst to best along a
/// linear extension and drop each outcome whose removal keeps the remaining
/// set enforceable. Enforceable families are upward closed, so the single
/// query per outcome decides the whole branch; the result is the
/// lexicographic maximum for the extension's lift, which is maximal for the
/// original lift as well. Exactly |O| decide calls, no strategy calls.
template <DeterminacyOracle O>
Subset maximal_enforceable_greedy(const Poset& pref1, O& oracle) {
  const int k = oracle.num_outcomes();
  Subset keep(static_cast<std::size_t>(k));
  keep.set();
  for (int o : pref1.linear_extension()) {
    Subset candidate = keep;
    candidate.reset(static_cast<std::size_t>(o));
    if (oracle.decide({candidate}) == Player::One) keep = std::move(candidate);
  }
  return keep;
}

/// Computes a Nash equilibrium of the game whose derived win/lose games the
/// oracle decides. Both preferences must be strict partial orders over the
/// oracle's outcome space. Throws OracleUnsoundError when the oracle's
/// answers contradict each other (which also catches non-determined forms).
template <DeterminacyOracle O>
TransferResult<typename O::Strategy1, typename O::Strategy2> equilibrium_transfer(
    const Poset& pref1, const Poset& pref2, O& oracle, TransferMode mode) {
  const int k = oracle.num_outcomes();
  if (pref1.size() != k || pref2.size() != k)
    throw std::invalid_argument("preference carrier does not match the outcome count");
  const long decisions_before = oracle.decisions();
  const long extractions_before = oracle.extractions();

  // Lock in a lift-maximal enforceable guarantee for Player 1.
  Subset guarantee = mode == TransferMode::kNaive
                         ? maximal_enforceable_naive(pref1, oracle)
                         : maximal_enforceable_greedy(pref1, oracle);
  if (guarantee.none())
    throw OracleUnsoundError("oracle granted player 1 the empty outcome set");
  auto s1 = oracle.player1_strategy({guarantee});

  // Player 2 answers with the best outcome inside the guarantee. Improving on
  // it would take enforcing the guarantee minus that outcome plus everything
  // Player 1 likes better — which would contradict the guarantee's maximality.
  const Subset best_replies = pref2.maximal_elements(guarantee);
  const int m = static_cast<int>(best_replies.find_first());
  const Subset improvement = pref1.replace_with_preferred(m, guarantee);
  if (oracle.decide({improvement}) != Player::Two)
    throw OracleUnsoundError(
        "oracle claims player 1 can enforce the improvement set; the guarantee "
        "set was not maximal or the oracle is inconsistent");
  auto s2 = oracle.player2_strategy({improvement});

  const int realized = oracle.outcome(s1, s2);
  if (realized != m)
    throw OracleUnsoundError("returned strategies realize outcome " +
                             std::to_string(realized) + ", expected " + std::to_string(m) +
                             "; an oracle strategy does not enforce its set");

  return {std::move(s1),
          std::move(s2),
          m,
          std::move(guarantee),
          std::move(improvement),
          oracle.decisions() - decisions_before,
          oracle.extractions() - extractions_before};
}

/// Determinacy oracle for matrix game forms, backed by the brute-force
/// winning-strategy scan. decide is partial: it reports undetermined
/// labelings by throwing NotDeterminedError at call time.
class MatrixOracle {
 public:
  using Strategy1 = int;
  using Strategy2 = int;

  explicit MatrixOracle(MatrixGameForm form) : form_(std::move(form)) {}

  const MatrixGameForm& form() const { return form_; }
  int num_outcomes() const { return form_.outcomes(); }

  Player decide(const WinLoseLabeling& wl) {
    ++decisions_;
    const auto won = winning_strategy(form_, wl);
    if (!won) throw NotDeterminedError(wl.player1_wins);
    return won->first;
  }

  int player1_strategy(const WinLoseLabeling& wl) { return extract(wl, Player::One); }
  int player2_strategy(const WinLoseLabeling& wl) { return extract(wl, Player::Two); }

  int outcome(const int& s1, const int& s2) const { return form_.outcome(s1, s2); }

  long decisions() const { return decisions_; }
  long extractions() const { return extractions_; }

 private:
  int extract(const WinLoseLabeling& wl, Player who) {
    ++extractions_;
    const auto won = winning_strategy(form_, wl);
    if (!won) throw NotDeterminedError(wl.player1_wins);
    if (won->first != who)
      throw OracleUnsoundError("winning strategy requested for the losing player");
    return won->second;
  }

  MatrixGameForm form_;
  long decisions_ = 0;
  long extractions_ = 0;
};

static_assert(DeterminacyOracle<MatrixOracle>);

/// Convenience entry point for matrix games.
inline TransferResult<int, int> equilibrium_transfer(const MatrixGame& game,
                                                     MatrixOracle& oracle,
                                                     TransferMode mode) {
  return equilibrium_transfer(game.pref1, game.pref2, oracle, mode);
}

}  // namespace equitrans
