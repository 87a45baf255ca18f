// Secure equilibria: Nash equilibria of the game with malevolent preferences,
// where each player first maximizes her own payoff and breaks ties by
// minimizing the opponent's.

#pragma once

#include "equitrans/games.hpp"
#include "equitrans/transfer.hpp"

#include <utility>

namespace equitrans {

/// The two malevolent orders derived from a payoff table. Outcomes with
/// identical payoff pairs stay incomparable, so the result is always a strict
/// partial order (and a strict linear order when all pairs are distinct).
std::pair<Poset, Poset> malevolent_prefs(const PayoffTable& payoffs);

/// The payoff game re-read under malevolent preferences.
MatrixGame malevolent_game(const MatrixGameForm& form, const PayoffTable& payoffs);

/// A secure equilibrium, computed as an equilibrium transfer under the
/// malevolent preferences. Works with any oracle backend, so the same entry
/// point serves matrix games and priority games.
template <DeterminacyOracle O>
TransferResult<typename O::Strategy1, typename O::Strategy2> secure_equilibrium(
    const PayoffTable& payoffs, O& oracle, TransferMode mode) {
  if (static_cast<int>(payoffs.size()) != oracle.num_outcomes())
    throw std::invalid_argument("payoff table size does not match the outcome count");
  auto [pref1, pref2] = malevolent_prefs(payoffs);
  return equilibrium_transfer(pref1, pref2, oracle, mode);
}

/// Independent brute-force checker: a profile is secure iff it is a Nash
/// equilibrium of the malevolent game.
bool is_secure(const MatrixGameForm& form, const PayoffTable& payoffs, Profile p);

}  // namespace equitrans
